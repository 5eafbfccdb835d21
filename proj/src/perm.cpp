#include "hyperoct/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <unordered_set>

#include "hyperoct/error.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

SignedPerm::SignedPerm(int n) {
  require(n >= 0, "degree must be non-negative");
  img_.resize(n);
  for (int i = 0; i < n; ++i) img_[i] = i + 1;
}

SignedPerm SignedPerm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : images) {
    int a = v < 0 ? -v : v;
    require(a >= 1 && a <= n, "image out of range for degree " + std::to_string(n));
    require(!seen[a], "duplicate image |" + std::to_string(a) + "|");
    seen[a] = 1;
  }
  SignedPerm g;
  g.img_ = std::move(images);
  return g;
}

int SignedPerm::image(int x) const {
  int a = x < 0 ? -x : x;
  require(a >= 1 && a <= degree(), "symbol out of range for degree " + std::to_string(degree()));
  int y = img_[a - 1];
  return x < 0 ? -y : y;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

SignedPerm compose(const SignedPerm& g, const SignedPerm& h) {
  require(g.degree() == h.degree(), "degree mismatch in composition");
  std::vector<int> img(g.degree());
  for (int i = 1; i <= g.degree(); ++i) img[i - 1] = h.image(g.image(i));
  return SignedPerm::from_images(std::move(img));
}

SignedPerm inverse(const SignedPerm& g) {
  std::vector<int> img(g.degree());
  for (int i = 1; i <= g.degree(); ++i) {
    int y = g.image(i);
    if (y > 0)
      img[y - 1] = i;
    else
      img[-y - 1] = -i;
  }
  return SignedPerm::from_images(std::move(img));
}

SignedPerm conjugate(const SignedPerm& g, const SignedPerm& h) {
  require(g.degree() == h.degree(), "degree mismatch in conjugation");
  return compose(compose(inverse(h), g), h);
}

CycleType cycle_type(const SignedPerm& g) {
  const int n = g.degree();
  CycleType t;
  t.n = n;
  // symbol indexing: x>0 -> x-1, x<0 -> n + (-x) - 1
  auto idx = [n](int x) { return x > 0 ? x - 1 : n + (-x) - 1; };
  std::vector<char> visited(2 * n, 0);
  auto symbol_at = [n](int k) { return k < n ? k + 1 : -(k - n + 1); };
  for (int k = 0; k < 2 * n; ++k) {
    if (visited[k]) continue;
    int start = symbol_at(k);
    std::vector<int> orbit;
    int x = start;
    do {
      visited[idx(x)] = 1;
      orbit.push_back(x);
      x = g.image(x);
    } while (x != start);
    bool bar_stable = false;
    for (int y : orbit)
      if (y == -start) {
        bar_stable = true;
        break;
      }
    if (bar_stable) {
      // even length 2r, counts as one negative r-cycle
      int r = static_cast<int>(orbit.size()) / 2;
      require(2 * r == static_cast<int>(orbit.size()), "bar-stable orbit of odd length",
              errc::internal);
      t.neg[r] += 1;
    } else {
      // mark the partner orbit too; the pair is one positive r-cycle
      for (int y : orbit) visited[idx(-y)] = 1;
      t.pos[static_cast<int>(orbit.size())] += 1;
    }
  }
  return t;
}

bool is_conjugate(const SignedPerm& a, const SignedPerm& b) {
  require(a.degree() == b.degree(), "degree mismatch in conjugacy test");
  return cycle_type(a) == cycle_type(b);
}

BigInt group_order(int n) {
  require(n >= 0, "degree must be non-negative");
  return ipow(2, n) * factorial(n);
}

BigInt centralizer_order(const CycleType& t) {
  BigInt r = 1;
  std::map<int, std::pair<int, int>> both;  // r -> (pos count, neg count)
  for (auto [len, m] : t.pos) both[len].first = m;
  for (auto [len, m] : t.neg) both[len].second = m;
  for (auto& [len, pn] : both) {
    r *= ipow(2 * len, pn.first + pn.second);
    r *= factorial(pn.first);
    r *= factorial(pn.second);
  }
  return r;
}

BigInt class_size(const CycleType& t) {
  return exact_div(group_order(t.n), centralizer_order(t));
}

std::vector<CycleType> all_cycle_types(int n) {
  require(n >= 0, "degree must be non-negative");
  std::vector<CycleType> out;
  auto to_map = [](const Partition& parts) {
    std::map<int, int> m;
    for (int x : parts) m[x] += 1;
    return m;
  };
  for (int k = n; k >= 0; --k) {
    for (const Partition& pp : partitions_of(k)) {
      for (const Partition& np : partitions_of(n - k)) {
        CycleType t;
        t.n = n;
        t.pos = to_map(pp);
        t.neg = to_map(np);
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::string format_cycle_type(const CycleType& t) {
  std::string s;
  for (auto [r, m] : t.pos) {
    if (!s.empty()) s += ' ';
    s += '+' + std::to_string(r) + '^' + std::to_string(m);
  }
  for (auto [r, m] : t.neg) {
    if (!s.empty()) s += ' ';
    s += '-' + std::to_string(r) + '^' + std::to_string(m);
  }
  if (s.empty()) s = "e";
  return s;
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int least_primitive_root(int p) {
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  // factor p-1
  std::vector<int> primes;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  auto powmod = [p](long long b, long long e) {
    long long r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<int>(r);
  };
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : primes)
      if (powmod(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(errc::internal, "no primitive root found mod " + std::to_string(p));
}

namespace {

void check_block_args(int j, int p, int n, const char* what) {
  require(is_odd_prime(p), std::string(what) + ": p must be an odd prime");
  require(j >= 1, std::string(what) + ": block index must be positive");
  require(j * p <= n, std::string(what) + ": block " + std::to_string(j) +
                          " does not fit in degree " + std::to_string(n));
}

}  // namespace

SignedPerm make_f(int a, int n) {
  require(a >= 0, "f: a must be non-negative");
  require(2 * a <= n, "f: support 2a exceeds degree");
  SignedPerm id(n);
  std::vector<int> img = id.images();
  for (int i = 1; i <= a; ++i) {
    img[i - 1] = i + a;
    img[i + a - 1] = i;
  }
  return SignedPerm::from_images(std::move(img));
}

SignedPerm make_sigma(int j, int p, int n) {
  check_block_args(j, p, n, "sigma");
  SignedPerm id(n);
  std::vector<int> img = id.images();
  int base = (j - 1) * p;
  for (int m = 1; m < p; ++m) img[base + m - 1] = base + m + 1;
  img[base + p - 1] = base + 1;
  return SignedPerm::from_images(std::move(img));
}

SignedPerm make_tau(int j, int p, int n) {
  check_block_args(j, p, n, "tau");
  SignedPerm id(n);
  std::vector<int> img = id.images();
  int base = (j - 1) * p;
  for (int m = 1; m <= p; ++m) img[base + m - 1] = -(base + m);
  return SignedPerm::from_images(std::move(img));
}

SignedPerm make_rho(int i, int p, int n) {
  require(is_odd_prime(p), "rho: p must be an odd prime");
  require(i >= 1, "rho: block index must be positive");
  require((i + 1) * p <= n, "rho: blocks " + std::to_string(i) + "," + std::to_string(i + 1) +
                                " do not fit in degree " + std::to_string(n));
  SignedPerm id(n);
  std::vector<int> img = id.images();
  for (int m = 1; m <= p; ++m) {
    img[(i - 1) * p + m - 1] = i * p + m;
    img[i * p + m - 1] = (i - 1) * p + m;
  }
  return SignedPerm::from_images(std::move(img));
}

SignedPerm make_z(int r, int p, int n) {
  require(is_odd_prime(p), "z: p must be an odd prime");
  require(r >= 1, "z: r must be positive");
  require(r * p <= n, "z: support rp exceeds degree");
  const int x = least_primitive_root(p);
  SignedPerm id(n);
  std::vector<int> img = id.images();
  // within each block, position m goes to the position congruent to
  // x(m-1)+1 mod p; the first position of every block is fixed
  for (int j = 1; j <= r; ++j) {
    int base = (j - 1) * p;
    for (int m = 1; m <= p; ++m) {
      int m2 = static_cast<int>((static_cast<long long>(x) * (m - 1)) % p) + 1;
      img[base + m - 1] = base + m2;
    }
  }
  return SignedPerm::from_images(std::move(img));
}

std::vector<SignedPerm> r_subgroup_gens(int r, int p, int n) {
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  require(r >= 1, "r must be positive");
  require(r * p <= n, "support rp exceeds degree");
  SignedPerm prod(n);
  for (int j = 1; j <= r; ++j) prod = compose(prod, make_sigma(j, p, n));
  return {prod};
}

std::vector<SignedPerm> normalizer_gens(int r, int p, int n) {
  std::vector<SignedPerm> gens = base_centralizer_gens(r, p, n);
  gens.push_back(make_z(r, p, n));
  return gens;
}

std::vector<SignedPerm> base_centralizer_gens(int r, int p, int n) {
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  require(r >= 1, "r must be positive");
  require(r * p <= n, "support rp exceeds degree");
  std::vector<SignedPerm> gens;
  for (int j = 1; j <= r; ++j) gens.push_back(make_tau(j, p, n));
  for (int j = 1; j <= r; ++j) gens.push_back(make_sigma(j, p, n));
  for (int i = 1; i + 1 <= r; ++i) gens.push_back(make_rho(i, p, n));
  return gens;
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

BigInt group_closure_order(const std::vector<SignedPerm>& gens, long long cap) {
  require(cap > 0, "closure cap must be positive");
  require(!gens.empty(), "closure of an empty generating set needs a degree; pass the identity");
  const int n = gens.front().degree();
  for (const auto& g : gens)
    require(g.degree() == n, "generators of mixed degree");
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::deque<SignedPerm> queue;
  seen.insert(SignedPerm(n).images());
  queue.push_back(SignedPerm(n));
  while (!queue.empty()) {
    SignedPerm cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      SignedPerm next = compose(cur, g);
      if (seen.insert(next.images()).second) {
        require(static_cast<long long>(seen.size()) <= cap,
                "closure exceeded cap " + std::to_string(cap), errc::limit_exceeded);
        queue.push_back(std::move(next));
      }
    }
  }
  return BigInt(seen.size());
}

std::string to_cycles(const SignedPerm& g) {
  const int n = g.degree();
  auto idx = [n](int x) { return x > 0 ? x - 1 : n + (-x) - 1; };
  auto symbol_at = [n](int k) { return k < n ? k + 1 : -(k - n + 1); };
  auto print_symbol = [](int x) {
    return x > 0 ? std::to_string(x) : std::to_string(-x) + "-";
  };
  std::vector<char> visited(2 * n, 0);
  std::string out;
  for (int k = 0; k < 2 * n; ++k) {
    if (visited[k]) continue;
    int start = symbol_at(k);
    std::vector<int> orbit;
    int x = start;
    do {
      visited[idx(x)] = 1;
      orbit.push_back(x);
      x = g.image(x);
    } while (x != start);
    if (orbit.size() == 1) continue;
    out += '(';
    for (size_t i = 0; i < orbit.size(); ++i) {
      if (i) out += ' ';
      out += print_symbol(orbit[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

SignedPerm parse_cycles(const std::string& text, int n) {
  require(n >= 0, "degree must be non-negative");
  std::map<int, int> partial;
  auto set_image = [&partial](int from, int to) {
    auto [it, inserted] = partial.emplace(from, to);
    (void)it;
    require(inserted, "cycle notation repeats symbol " + std::to_string(from));
  };
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    require(text[i] == '(', "expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      require(std::isdigit(static_cast<unsigned char>(text[i])),
              "expected a symbol in cycle notation");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        require(v <= n, "symbol " + std::to_string(v) + " out of range for degree " +
                            std::to_string(n));
        ++i;
      }
      require(v >= 1, "symbols are numbered from 1");
      int sym = static_cast<int>(v);
      if (i < text.size() && text[i] == '-') {
        sym = -sym;
        ++i;
      }
      cyc.push_back(sym);
      skip_ws();
    }
    require(i < text.size(), "unterminated cycle");
    ++i;  // ')'
    skip_ws();
    saw_cycle = true;
    if (cyc.empty()) continue;  // "()" is the identity
    for (size_t k = 0; k < cyc.size(); ++k) set_image(cyc[k], cyc[(k + 1) % cyc.size()]);
  }
  require(saw_cycle, "empty cycle notation; use \"()\" for the identity");
  // complete bar-images that were left implicit, then check consistency
  std::map<int, int> full = partial;
  for (auto [from, to] : partial) {
    auto it = full.find(-from);
    if (it == full.end())
      full[-from] = -to;
    else
      require(it->second == -to, "cycle notation conflicts with bar-equivariance at symbol " +
                                     std::to_string(from));
  }
  std::vector<int> img(n);
  for (int s = 1; s <= n; ++s) {
    auto it = full.find(s);
    img[s - 1] = it == full.end() ? s : it->second;
  }
  return SignedPerm::from_images(std::move(img));
}

}  // namespace hyperoct
