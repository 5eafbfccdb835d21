#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace oracles {

using hyperoct::BigInt;
using hyperoct::Partition;
using hyperoct::SignedPerm;

std::vector<SignedPerm> all_group_elements(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::sort(base.begin(), base.end());
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> img(base);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) img[i] = -img[i];
      out.push_back(SignedPerm::from_images(img));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

namespace {

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// All partitions reachable from `p` by removing one border strip of size
// `len`.  A strip spanning rows r..q leaves lambda_{i+1} - 1 in rows
// r..q-1 and lambda_r + (q - r) - len in row q.
std::vector<Partition> strip_once(const Partition& p, int len) {
  std::vector<Partition> out;
  const int rows = static_cast<int>(p.size());
  for (int r = 0; r < rows; ++r) {
    for (int q = r; q < rows; ++q) {
      int bottom = p[r] + (q - r) - len;
      int below = (q + 1 < rows) ? p[q + 1] : 0;
      if (bottom < below || bottom > p[q] - 1) continue;
      bool ok = true;
      Partition next(p);
      for (int i = r; i < q; ++i) {
        next[i] = p[i + 1] - 1;
        if (next[i] < 0) ok = false;
      }
      next[q] = bottom;
      if (!ok) continue;
      out.push_back(trimmed(next));
    }
  }
  return out;
}

// Strips every removable choice at every level and insists they all land
// on the same core at the same depth, so order-independence is verified
// throughout the whole removal tree.
std::pair<Partition, int> core_and_depth(const Partition& p, int mod,
                                         std::map<Partition, std::pair<Partition, int>>& memo) {
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  auto next = strip_once(p, mod);
  std::pair<Partition, int> result;
  if (next.empty()) {
    result = {p, 0};
  } else {
    bool first = true;
    for (const auto& q : next) {
      auto sub = core_and_depth(q, mod, memo);
      sub.second += 1;
      if (first) {
        result = sub;
        first = false;
      } else if (sub != result) {
        throw std::logic_error("border-strip removal gave an order-dependent result");
      }
    }
  }
  memo[p] = result;
  return result;
}

std::map<Partition, std::pair<Partition, int>>& strip_memo(int mod) {
  static std::map<int, std::map<Partition, std::pair<Partition, int>>> memos;
  return memos[mod];
}

}  // namespace

Partition strip_core(const Partition& p, int mod) {
  return core_and_depth(trimmed(p), mod, strip_memo(mod)).first;
}

int strip_weight(const Partition& p, int mod) {
  return core_and_depth(trimmed(p), mod, strip_memo(mod)).second;
}

BigInt syt_count_dp(const Partition& p) {
  static std::map<Partition, BigInt> memo;
  Partition key = trimmed(p);
  if (key.empty()) return 1;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (size_t i = 0; i < key.size(); ++i) {
    bool corner = (i + 1 == key.size()) || key[i] > key[i + 1];
    if (!corner) continue;
    Partition next(key);
    next[i] -= 1;
    total += syt_count_dp(next);
  }
  memo[key] = total;
  return total;
}

namespace {

// Entries worked out by hand from hook chains, regularization and
// dimension counts, then cross-checked against each other.
KnownMatrix make_n1() {
  return {{{1}}, {{1}}, {{1}}};
}

KnownMatrix make_n2() {
  return {{{2}, {1, 1}}, {{2}, {1, 1}}, {{1, 0}, {0, 1}}};
}

KnownMatrix make_n3() {
  return {{{3}, {2, 1}, {1, 1, 1}},
          {{3}, {2, 1}},
          {{1, 0}, {1, 1}, {0, 1}}};
}

KnownMatrix make_n4() {
  return {{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}},
          {{4}, {3, 1}, {2, 2}, {2, 1, 1}},
          {{1, 0, 0, 0},
           {0, 1, 0, 0},
           {1, 0, 1, 0},
           {0, 0, 0, 1},
           {0, 0, 1, 0}}};
}

KnownMatrix make_n5() {
  return {{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}},
          {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}},
          {{1, 0, 0, 0, 0},
           {0, 1, 0, 0, 0},
           {0, 1, 1, 0, 0},
           {0, 0, 0, 1, 0},
           {1, 0, 0, 0, 1},
           {0, 0, 0, 0, 1},
           {0, 0, 1, 0, 0}}};
}

KnownMatrix make_n6() {
  return {{{6},
           {5, 1},
           {4, 2},
           {4, 1, 1},
           {3, 3},
           {3, 2, 1},
           {3, 1, 1, 1},
           {2, 2, 2},
           {2, 2, 1, 1},
           {2, 1, 1, 1, 1},
           {1, 1, 1, 1, 1, 1}},
          {{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}, {3, 2, 1}, {2, 2, 1, 1}},
          {{1, 0, 0, 0, 0, 0, 0},
           {1, 1, 0, 0, 0, 0, 0},
           {0, 0, 1, 0, 0, 0, 0},
           {0, 1, 0, 1, 0, 0, 0},
           {0, 1, 0, 0, 1, 0, 0},
           {1, 1, 0, 1, 1, 1, 0},
           {0, 0, 0, 1, 0, 1, 0},
           {1, 0, 0, 0, 0, 1, 0},
           {0, 0, 0, 0, 0, 0, 1},
           {0, 0, 0, 0, 1, 1, 0},
           {0, 0, 0, 0, 1, 0, 0}}};
}

}  // namespace

const KnownMatrix& sym_mod3_matrix(int n) {
  static const KnownMatrix m1 = make_n1();
  static const KnownMatrix m2 = make_n2();
  static const KnownMatrix m3 = make_n3();
  static const KnownMatrix m4 = make_n4();
  static const KnownMatrix m5 = make_n5();
  static const KnownMatrix m6 = make_n6();
  switch (n) {
    case 1: return m1;
    case 2: return m2;
    case 3: return m3;
    case 4: return m4;
    case 5: return m5;
    case 6: return m6;
  }
  throw std::out_of_range("no stored matrix for n=" + std::to_string(n));
}

std::vector<Partition> matrix_column(const KnownMatrix& m, const Partition& head) {
  auto it = std::find(m.cols.begin(), m.cols.end(), head);
  if (it == m.cols.end()) throw std::out_of_range("no column with that head");
  size_t col = static_cast<size_t>(it - m.cols.begin());
  std::vector<Partition> out;
  for (size_t r = 0; r < m.rows.size(); ++r)
    if (m.entries[r][col]) out.push_back(m.rows[r]);
  return out;
}

SignedPerm random_element(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) img[i] = -img[i];
  return SignedPerm::from_images(img);
}

}  // namespace oracles
