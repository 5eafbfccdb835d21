#include "hyperoct/repdata.hpp"

#include <algorithm>
#include <functional>

#include "hyperoct/error.hpp"

namespace hyperoct {

BigInt hook_product(const Partition& p) {
  require(is_partition(p), "not a partition");
  const int rows = static_cast<int>(p.size());
  const int cols = rows ? p[0] : 0;
  std::vector<int> conj(cols, 0);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if (p[i] > j) conj[j] += 1;
  BigInt prod = 1;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < p[i]; ++j) prod *= (p[i] - j) + (conj[j] - i) - 1;
  return prod;
}

BigInt syt_count(const Partition& p) { return exact_div(factorial(size_of(p)), hook_product(p)); }

BigInt specht_dim(const Bipartition& label) {
  require(is_partition(label.first) && is_partition(label.second), "not a bipartition");
  int n = size_of(label);
  return binomial(n, size_of(label.first)) * syt_count(label.first) * syt_count(label.second);
}

namespace {

// All standard fillings of one shape with the given (sorted ascending)
// entries; each filling is emitted as rows of entries.
std::vector<std::vector<std::vector<int>>> standard_fillings(const Partition& shape,
                                                             const std::vector<int>& entries) {
  std::vector<std::vector<std::vector<int>>> out;
  const int rows = static_cast<int>(shape.size());
  std::vector<int> filled(rows, 0);
  std::vector<std::vector<int>> tab(rows);
  for (int i = 0; i < rows; ++i) tab[i].resize(shape[i]);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == entries.size()) {
      out.push_back(tab);
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (filled[r] >= shape[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column must grow downward
      tab[r][filled[r]] = entries[k];
      filled[r] += 1;
      rec(k + 1);
      filled[r] -= 1;
    }
  };
  if (rows == 0) {
    if (entries.empty()) out.push_back({});
    return out;
  }
  rec(0);
  return out;
}

std::string render_rows(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ';';
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rows[i][j]);
    }
  }
  return s;
}

}  // namespace

std::vector<std::string> enumerate_standard_tableaux(const Bipartition& shape) {
  require(is_partition(shape.first) && is_partition(shape.second), "not a bipartition");
  const int n = size_of(shape);
  const int k = size_of(shape.first);
  std::vector<std::string> out;
  // iterate k-subsets of 1..n in lexicographic order
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  auto advance = [&]() -> bool {
    for (int i = k - 1; i >= 0; --i) {
      if (pick[i] < n - (k - 1 - i)) {
        pick[i] += 1;
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  while (true) {
    std::vector<int> rest;
    {
      std::vector<char> used(n + 1, 0);
      for (int v : pick) used[v] = 1;
      for (int v = 1; v <= n; ++v)
        if (!used[v]) rest.push_back(v);
    }
    for (const auto& left : standard_fillings(shape.first, pick))
      for (const auto& right : standard_fillings(shape.second, rest))
        out.push_back(render_rows(left) + "|" + render_rows(right));
    if (k == 0 || !advance()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlockLabel block_label(const Bipartition& label, int mod) {
  BlockLabel b;
  b.gamma = p_core(label.first, mod);
  b.v = p_weight(label.first, mod);
  b.delta = p_core(label.second, mod);
  b.w = p_weight(label.second, mod);
  return b;
}

std::vector<Bipartition> simple_labels(int n, int mod) {
  std::vector<Bipartition> out;
  for (Bipartition& bp : bipartitions_of(n))
    if (is_p_regular(bp.first, mod) && is_p_regular(bp.second, mod)) out.push_back(std::move(bp));
  return out;
}

std::vector<Bipartition> model_constituents(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "negative model index");
  std::vector<Bipartition> out;
  for (Bipartition& bp : bipartitions_of(2 * a + b + c))
    if (odd_parts_count(bp.first) == b && odd_parts_count(bp.second) == c)
      out.push_back(std::move(bp));
  return out;
}

BigInt model_dim(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "negative model index");
  const int n = 2 * a + b + c;
  BigInt num = ipow(2, n) * factorial(n);
  BigInt den = ipow(4, a) * factorial(a) * ipow(2, b + c) * factorial(b + c);
  return exact_div(num, den) * binomial(b + c, b);
}

}  // namespace hyperoct
