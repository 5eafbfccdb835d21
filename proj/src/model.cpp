#include "hyperoct/model.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "hyperoct/error.hpp"
#include "hyperoct/repdata.hpp"

namespace hyperoct {

namespace {

void check_index(const ModelIndex& idx) {
  require(idx.a >= 0 && idx.b >= 0 && idx.c >= 0, "negative model index");
}

// k-subsets of 1..n in lexicographic order
std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = pool[pick[i]];
      out.push_back(std::move(c));
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// All pairings of `points` (even size) into unordered pairs with an
// orientation bit each: smallest point pairs first, partner ascending,
// plain orientation before the barred one.
void enumerate_matchings(std::vector<int> points,
                         std::vector<std::tuple<int, int, bool>>& current,
                         const std::function<void(const std::vector<std::tuple<int, int, bool>>&)>& emit) {
  if (points.empty()) {
    emit(current);
    return;
  }
  int first = points.front();
  for (size_t j = 1; j < points.size(); ++j) {
    std::vector<int> rest;
    rest.reserve(points.size() - 2);
    for (size_t i = 1; i < points.size(); ++i)
      if (i != j) rest.push_back(points[i]);
    for (bool barred : {false, true}) {
      current.emplace_back(first, points[j], barred);
      enumerate_matchings(rest, current, emit);
      current.pop_back();
    }
  }
}

SignedPerm involution_from_pairs(const std::vector<std::tuple<int, int, bool>>& pairs, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  for (auto [x, y, barred] : pairs) {
    if (!barred) {
      img[x - 1] = y;
      img[y - 1] = x;
    } else {
      img[x - 1] = -y;
      img[y - 1] = -x;
    }
  }
  return SignedPerm::from_images(std::move(img));
}

int inversion_parity(const std::vector<int>& v) {
  int inv = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) inv ^= 1;
  return inv;
}

}  // namespace

std::vector<ModelVector> enumerate_basis(const ModelIndex& idx) {
  check_index(idx);
  const int n = idx.n();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::vector<ModelVector> out;
  for (const auto& support : combinations(all, 2 * idx.a)) {
    std::vector<int> others;
    {
      std::vector<char> used(n + 1, 0);
      for (int v : support) used[v] = 1;
      for (int v = 1; v <= n; ++v)
        if (!used[v]) others.push_back(v);
    }
    std::vector<SignedPerm> gs;
    std::vector<std::tuple<int, int, bool>> cur;
    enumerate_matchings(support, cur,
                        [&](const std::vector<std::tuple<int, int, bool>>& pairs) {
                          gs.push_back(involution_from_pairs(pairs, n));
                        });
    for (const auto& g : gs) {
      for (const auto& gam : combinations(others, idx.b)) {
        std::vector<int> del;
        {
          std::vector<char> used(n + 1, 0);
          for (int v : gam) used[v] = 1;
          for (int v : others)
            if (!used[v]) del.push_back(v);
        }
        ModelVector v;
        v.g = g;
        v.gamma = gam;
        v.delta = del;
        v.sign = 1;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

ModelVector act(const ModelVector& v, const SignedPerm& h) {
  require(v.degree() == h.degree(), "degree mismatch in module action");
  ModelVector w;
  w.g = conjugate(v.g, h);
  w.sign = v.sign;
  // gamma entries are unordered bar-pairs: only the rearrangement signs
  std::vector<int> graw(v.gamma.size());
  for (size_t i = 0; i < v.gamma.size(); ++i) {
    int y = h.image(v.gamma[i]);
    graw[i] = y < 0 ? -y : y;
  }
  if (inversion_parity(graw)) w.sign = -w.sign;
  std::sort(graw.begin(), graw.end());
  w.gamma = std::move(graw);
  // delta entries are oriented: a barred image flips the orientation once
  std::vector<int> draw(v.delta.size());
  for (size_t i = 0; i < v.delta.size(); ++i) {
    int y = h.image(v.delta[i]);
    if (y < 0) {
      w.sign = -w.sign;
      y = -y;
    }
    draw[i] = y;
  }
  if (inversion_parity(draw)) w.sign = -w.sign;
  std::sort(draw.begin(), draw.end());
  w.delta = std::move(draw);
  return w;
}

bool theta_fixed(const ModelVector& v, const std::vector<SignedPerm>& gens) {
  for (const auto& h : gens) {
    ModelVector w = act(v, h);
    if (w.g != v.g || w.gamma != v.gamma || w.delta != v.delta) return false;
  }
  return true;
}

BigInt brauer_quotient_dim(const ModelIndex& idx, const std::vector<SignedPerm>& gens,
                           long long limit, int jobs) {
  check_index(idx);
  const int n = idx.n();
  for (const auto& g : gens)
    require(g.degree() == n, "generator degree does not match the module degree");
  if (limit >= 0) {
    BigInt dim = model_dim(idx.a, idx.b, idx.c);
    require(dim <= limit, "basis has " + dim.str() + " vectors, over the limit " +
                              std::to_string(limit),
            errc::limit_exceeded);
  }
  std::vector<ModelVector> basis = enumerate_basis(idx);
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || basis.size() < 2048) {
    long long count = 0;
    for (const auto& v : basis)
      if (theta_fixed(v, gens)) ++count;
    return BigInt(count);
  }
  std::vector<long long> partial(jobs, 0);
  std::vector<std::thread> workers;
  const size_t chunk = (basis.size() + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    size_t lo = w * chunk, hi = std::min(basis.size(), lo + chunk);
    workers.emplace_back([&, lo, hi, w] {
      long long c = 0;
      for (size_t i = lo; i < hi; ++i)
        if (theta_fixed(basis[i], gens)) ++c;
      partial[w] = c;
    });
  }
  for (auto& t : workers) t.join();
  long long count = 0;
  for (long long c : partial) count += c;  // fixed merge order
  return BigInt(count);
}

std::vector<Omega> omega_enum(int s, int k) {
  require(s >= 0 && k >= 0, "negative shape for pair/rest partitions");
  const int r = 2 * s + k;
  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i + 1;
  std::vector<Omega> out;
  for (const auto& rest : combinations(all, k)) {
    std::vector<int> left;
    {
      std::vector<char> used(r + 1, 0);
      for (int v : rest) used[v] = 1;
      for (int v = 1; v <= r; ++v)
        if (!used[v]) left.push_back(v);
    }
    // pair up `left`: smallest element first, partner ascending
    std::vector<std::pair<int, int>> pairs;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& pts) {
      if (pts.empty()) {
        Omega w;
        w.pairs = pairs;
        w.rest = rest;
        out.push_back(std::move(w));
        return;
      }
      int first = pts.front();
      for (size_t j = 1; j < pts.size(); ++j) {
        std::vector<int> nxt;
        for (size_t i = 1; i < pts.size(); ++i)
          if (i != j) nxt.push_back(pts[i]);
        pairs.emplace_back(first, pts[j]);
        rec(nxt);
        pairs.pop_back();
      }
    };
    rec(left);
  }
  return out;
}

BigInt omega_count(int s, int k) {
  require(s >= 0 && k >= 0, "negative shape for pair/rest partitions");
  return exact_div(factorial(2 * s + k), ipow(2, s) * factorial(s) * factorial(k));
}

std::vector<SignedPerm> r_omega_gens(const Omega& w, int p, int n) {
  std::vector<SignedPerm> gens;
  for (auto [i, j] : w.pairs) gens.push_back(compose(make_sigma(i, p, n), make_sigma(j, p, n)));
  for (int j : w.rest) gens.push_back(make_sigma(j, p, n));
  return gens;
}

std::vector<std::array<int, 3>> t_set(const ModelIndex& idx, int p, int r) {
  check_index(idx);
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  require(r >= 1, "r must be positive");
  require(r * p <= idx.n(), "rp exceeds the module degree");
  std::vector<std::array<int, 3>> out;
  for (int s = std::min(idx.a / p, r / 2); s >= 0; --s) {
    for (int t = std::min(r - 2 * s, idx.b / p); t >= 0; --t) {
      int u = r - 2 * s - t;
      if (u * p <= idx.c) out.push_back({s, t, u});
    }
  }
  return out;
}

std::vector<TPrimeEntry> t_prime_set(const ModelIndex& idx, int p, int r) {
  std::vector<TPrimeEntry> out;
  for (auto [s, t, u] : t_set(idx, p, r))
    for (int l1 = s; l1 >= 0; --l1) out.push_back({TwoComp{l1, s - l1}, t, u});
  return out;
}

SummandTable summand_dim_table(const ModelIndex& idx, int p, int r, long long limit, int jobs) {
  SummandTable table;
  for (auto [s, t, u] : t_set(idx, p, r)) {
    SummandRow row;
    row.s = s;
    row.t = t;
    row.u = u;
    ModelIndex head{s * p, t * p, u * p};
    row.fixed_dim = brauer_quotient_dim(head, r_subgroup_gens(r, p, head.n()), limit, jobs);
    row.tail_dim = model_dim(idx.a - s * p, idx.b - t * p, idx.c - u * p);
    row.value = row.fixed_dim * row.tail_dim;
    table.rows.push_back(std::move(row));
  }
  table.total = brauer_quotient_dim(idx, r_subgroup_gens(r, p, idx.n()), limit, jobs);
  BigInt sum = 0;
  for (const auto& row : table.rows) sum += row.value;
  require(sum == table.total, "summand table rows do not add up to the fixed-point count",
          errc::internal);
  return table;
}

BigInt fixed_dim_formula(int s, int t, int u, int p) {
  require(s >= 0 && t >= 0 && u >= 0, "negative orbit counts");
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  return ipow(2 * p, s) * binomial(t + u, t) * omega_count(s, t + u);
}

BigInt n_lambda_dim(const TwoComp& lambda, int t, int u, int p) {
  require(lambda.l1 >= 0 && lambda.l2 >= 0 && t >= 0 && u >= 0, "negative parameters");
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  const int s = lambda.sum(), k = t + u;
  return omega_count(s, k) * binomial(s, lambda.l1) * ipow(p, s) * binomial(k, t);
}

std::vector<SignedPerm> q_subgroup_gens(const TwoComp& lambda, int t, int u, int p, int n) {
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  const int s = lambda.sum();
  require(lambda.l1 >= 0 && lambda.l2 >= 0 && t >= 0 && u >= 0, "negative parameters");
  require(s < p && t < p && u < p,
          "explicit generators only exist in the regime |lambda| < p, t < p, u < p");
  const int r = 2 * s + t + u;
  require(r >= 1, "trivial shape has no generators");
  require(r * p <= n, "support rp exceeds degree");
  std::vector<SignedPerm> gens;
  for (int i = 1; i <= s; ++i)
    gens.push_back(compose(make_sigma(i, p, n), make_sigma(i + s, p, n)));
  for (int j = 2 * s + 1; j <= r; ++j) gens.push_back(make_sigma(j, p, n));
  return gens;
}

namespace {

std::string vertex_name(const TwoComp& lambda, int t, int u, int p) {
  std::string s = "Syl_" + std::to_string(p) + "(";
  bool first = true;
  auto add = [&](const std::string& factor) {
    if (!first) s += " x ";
    s += factor;
    first = false;
  };
  if (lambda.sum() > 0) {
    std::string v = "V_(" + std::to_string(lambda.l1 * p);
    if (lambda.l2 > 0) v += "," + std::to_string(lambda.l2 * p);
    v += ")";
    add(v);
  }
  if (t > 0) add("C2wrS_" + std::to_string(t * p));
  if (u > 0) add("C2wrS_" + std::to_string(u * p));
  s += ")";
  return s;
}

}  // namespace

std::vector<VertexDescriptor> vertex_catalog(const ModelIndex& idx, int p) {
  check_index(idx);
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  std::vector<VertexDescriptor> out;
  for (int r = 1; r * p <= idx.n(); ++r) {
    for (const auto& entry : t_prime_set(idx, p, r)) {
      if (entry.lambda.l1 < entry.lambda.l2) continue;  // reversal is conjugate
      VertexDescriptor d;
      d.r = r;
      d.lambda = entry.lambda;
      d.t = entry.t;
      d.u = entry.u;
      d.name = vertex_name(entry.lambda, entry.t, entry.u, p);
      if (entry.lambda.sum() < p && entry.t < p && entry.u < p) {
        d.has_gens = true;
        d.gens = q_subgroup_gens(entry.lambda, entry.t, entry.u, p, idx.n());
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace hyperoct
