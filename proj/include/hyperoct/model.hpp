#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/perm.hpp"

namespace hyperoct {

struct ModelIndex {
  int a = 0, b = 0, c = 0;
  int n() const { return 2 * a + b + c; }
  bool operator==(const ModelIndex&) const = default;
};

// Canonical basis vector of the twisted permutation module M_(2a,b,c):
//   g      an involution made of a disjoint positive 2-cycles,
//   gamma  b unordered bar-pairs {x, -x}, recorded by x, strictly increasing,
//   delta  c oriented bar-pairs [x, -x], all stored in the positive
//          orientation, indices strictly increasing,
//   sign   +1 or -1, carried by the vector rather than the tuples.
// Supports of g, gamma and delta partition {1..n}.
struct ModelVector {
  SignedPerm g;
  std::vector<int> gamma;
  std::vector<int> delta;
  int sign = 1;
  int degree() const { return g.degree(); }
  bool operator==(const ModelVector&) const = default;
};

// All canonical basis vectors, sign +1, in a fixed deterministic order.
std::vector<ModelVector> enumerate_basis(const ModelIndex& idx);

// Right action of a signed permutation, re-canonicalised.  Reordering the
// gamma- and delta-tuples costs the parity of the rearrangement, and every
// orientation flip [x,-x] -> [-x,x] costs a further -1.
ModelVector act(const ModelVector& v, const SignedPerm& h);

// True when every generator fixes the underlying unordered datum of v
// (g itself, the gamma support set, the delta support set); signs ignored.
bool theta_fixed(const ModelVector& v, const std::vector<SignedPerm>& gens);

// Number of theta-fixed canonical basis vectors of M_(2a,b,c) under <gens>.
// Refuses (limit error) if the basis would exceed `limit` vectors; `jobs`
// splits the scan over threads, with a deterministic merge.
BigInt brauer_quotient_dim(const ModelIndex& idx, const std::vector<SignedPerm>& gens,
                           long long limit = -1, int jobs = 1);

// A partition of {1..r} into s unordered pairs and one k-set, r = 2s+k.
struct Omega {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> rest;
  bool operator==(const Omega&) const = default;
};

std::vector<Omega> omega_enum(int s, int k);
BigInt omega_count(int s, int k);  // (2s+k)! / (2^s s! k!)

// sigma_i sigma_j for each pair {i,j}, sigma_j for each j in the rest.
std::vector<SignedPerm> r_omega_gens(const Omega& w, int p, int n);

struct SummandRow {
  int s = 0, t = 0, u = 0;  // orbit counts: 2s+t+u = r
  BigInt fixed_dim;         // theta-fixed count of M_(2sp,tp,up) under R_r
  BigInt tail_dim;          // dim M_(2(a-sp), b-tp, c-up)
  BigInt value;             // product
};

struct SummandTable {
  std::vector<SummandRow> rows;
  BigInt total;  // theta-fixed count of the whole module under R_r
};

// Triples (s,t,u) with 2s+t+u = r, sp <= a, tp <= b, up <= c.
std::vector<std::array<int, 3>> t_set(const ModelIndex& idx, int p, int r);

struct TwoComp {
  int l1 = 0, l2 = 0;  // a composition of s = l1 + l2 into at most two parts
  int sum() const { return l1 + l2; }
  bool operator==(const TwoComp&) const = default;
};

struct TPrimeEntry {
  TwoComp lambda;
  int t = 0, u = 0;
  bool operator==(const TPrimeEntry&) const = default;
};

std::vector<TPrimeEntry> t_prime_set(const ModelIndex& idx, int p, int r);

SummandTable summand_dim_table(const ModelIndex& idx, int p, int r, long long limit = -1,
                               int jobs = 1);

// Closed forms used by the bookkeeping identities.
BigInt fixed_dim_formula(int s, int t, int u, int p);           // (2p)^s C(t+u,t) c_{s,t+u}
BigInt n_lambda_dim(const TwoComp& lambda, int t, int u, int p);  // c_{s,k} C(s,l1) p^s C(k,t)

// Generators of the distinguished p-subgroup attached to (lambda, t, u):
// diagonal products sigma_i sigma_{i+s} for i <= s, then the singletons
// sigma_{2s+1} .. sigma_r.  Only available when |lambda| < p, t < p, u < p.
std::vector<SignedPerm> q_subgroup_gens(const TwoComp& lambda, int t, int u, int p, int n);

struct VertexDescriptor {
  int r = 0;
  TwoComp lambda;
  int t = 0, u = 0;
  std::string name;
  bool has_gens = false;
  std::vector<SignedPerm> gens;
};

// One descriptor per (lambda,t,u) with lambda1 >= lambda2 (a composition and
// its reversal describe conjugate subgroups), over every r with rp <= n.
std::vector<VertexDescriptor> vertex_catalog(const ModelIndex& idx, int p);

}  // namespace hyperoct
