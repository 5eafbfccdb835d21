#include "hyperoct/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "hyperoct/error.hpp"

namespace hyperoct {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
int size_of(const Bipartition& p) { return size_of(p.first) + size_of(p.second); }

bool dominates(const Partition& a, const Partition& b) {
  require(is_partition(a) && is_partition(b), "dominance needs valid partitions");
  require(size_of(a) == size_of(b), "dominance is only defined for equal sizes");
  long long sa = 0, sb = 0;
  size_t len = std::max(a.size(), b.size());
  for (size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

bool is_p_regular(const Partition& p, int mod) {
  require(mod >= 2, "regularity modulus must be at least 2");
  require(is_partition(p), "not a partition");
  int run = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    run = (i && p[i] == p[i - 1]) ? run + 1 : 1;
    if (run >= mod) return false;
  }
  return true;
}

Partition p_core(const Partition& p, int mod) {
  require(mod >= 2, "core modulus must be at least 2");
  require(is_partition(p), "not a partition");
  const int L = static_cast<int>(p.size());
  if (L == 0) return {};
  // First-column hook lengths ("beta numbers") with L beads, then push every
  // bead as far up its runner as it goes.  The reconstruction is independent
  // of the number of beads used.
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = p[i] + (L - 1 - i);
  std::vector<int> runner_count(mod, 0);
  for (int b : beta) runner_count[b % mod] += 1;
  std::vector<int> packed;
  packed.reserve(L);
  for (int c = 0; c < mod; ++c)
    for (int j = 0; j < runner_count[c]; ++j) packed.push_back(c + j * mod);
  std::sort(packed.rbegin(), packed.rend());
  Partition core;
  for (int i = 0; i < L; ++i) {
    int part = packed[i] - (L - 1 - i);
    require(part >= 0, "negative part while packing beads", errc::internal);
    if (part > 0) core.push_back(part);
  }
  require(is_partition(core), "packed beads do not form a partition", errc::internal);
  return core;
}

int p_weight(const Partition& p, int mod) {
  int removed = size_of(p) - size_of(p_core(p, mod));
  require(removed % mod == 0, "core size defect not divisible by modulus", errc::internal);
  return removed / mod;
}

int odd_parts_count(const Partition& p) {
  int c = 0;
  for (int x : p) c += x & 1;
  return c;
}

std::vector<Partition> partitions_of(int n) {
  require(n >= 0, "cannot partition a negative number");
  require(n <= 64, "partition enumeration beyond 64 is not supported", errc::limit_exceeded);
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const Partition& a : partitions_of(k))
      for (const Partition& b : partitions_of(n - k)) out.push_back({a, b});
  return out;
}

std::vector<Partition> add_hooks_enum(const Partition& core, int mod, int w) {
  require(w >= 0, "weight must be non-negative");
  require(p_core(core, mod) == core,
          "\"" + format_partition(core) + "\" is not a " + std::to_string(mod) + "-core");
  std::vector<Partition> out;
  for (Partition& cand : partitions_of(size_of(core) + w * mod))
    if (p_core(cand, mod) == core) out.push_back(std::move(cand));
  return out;
}

ESet w_and_E(const Partition& core, int mod, int b, int w_cap) {
  require(b >= 0, "odd-part count must be non-negative");
  require(w_cap >= 0, "weight cap must be non-negative");
  for (int w = 0; w <= w_cap; ++w) {
    ESet e;
    e.w = w;
    for (Partition& cand : add_hooks_enum(core, mod, w))
      if (odd_parts_count(cand) == b) e.elements.push_back(std::move(cand));
    if (!e.elements.empty()) return e;
  }
  fail(errc::limit_exceeded, "no weight up to " + std::to_string(w_cap) + " admits " +
                                 std::to_string(b) + " odd parts over core \"" +
                                 format_partition(core) + "\"");
}

bool hypothesis_check(const Partition& core, int mod, int b, int w_cap) {
  if (b < mod) return true;
  int wb = w_and_E(core, mod, b, w_cap).w;
  int wprev = w_and_E(core, mod, b - mod, w_cap).w;
  return wprev != wb - 1;
}

std::vector<Partition> maximal_elements(const std::vector<Partition>& set) {
  std::vector<Partition> out;
  for (size_t i = 0; i < set.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < set.size(); ++j) {
      if (i == j || set[i] == set[j]) continue;
      if (dominates(set[j], set[i])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(set[i]);
  }
  return out;
}

std::string format_partition(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    require(std::isdigit(static_cast<unsigned char>(text[i])),
            "malformed partition \"" + text + "\"");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      require(v <= 1000000, "partition part too large");
      ++i;
    }
    p.push_back(static_cast<int>(v));
    skip_ws();
    if (i < text.size()) {
      require(text[i] == ',', "malformed partition \"" + text + "\"");
      ++i;
      skip_ws();
      require(i < text.size(), "trailing comma in partition \"" + text + "\"");
    }
  }
  require(is_partition(p), "parts must be positive and weakly decreasing in \"" + text + "\"");
  return p;
}

std::string format_bipartition(const Bipartition& p) {
  return format_partition(p.first) + "|" + format_partition(p.second);
}

Bipartition parse_bipartition(const std::string& text) {
  size_t bar = text.find('|');
  require(bar != std::string::npos, "bipartition must contain '|': \"" + text + "\"");
  require(text.find('|', bar + 1) == std::string::npos,
          "bipartition must contain a single '|': \"" + text + "\"");
  return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

}  // namespace hyperoct
