#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperoct/bigint.hpp"

namespace hyperoct {

// A signed permutation of degree n: a bijection g of the 2n symbols
// {1..n, -1..-n} satisfying g(-x) = -g(x).  Barred symbols are the negative
// integers, so the bar involution is plain negation.  Only images of 1..n are
// stored; the rest follows by equivariance.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(int n);  // identity of degree n

  // Validates bijectivity: |images| must be a rearrangement of 1..n.
  static SignedPerm from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int x) const;
  bool is_identity() const;
  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

SignedPerm compose(const SignedPerm& g, const SignedPerm& h);    // apply g, then h
SignedPerm inverse(const SignedPerm& g);
SignedPerm conjugate(const SignedPerm& g, const SignedPerm& h);  // h^{-1} g h

// Cycle data of a signed permutation.  An orbit of <g> on the symbols is
// negative iff it is bar-stable (closed under negation); such an orbit has
// even length 2r and counts once in neg[r].  Non-stable orbits come in
// bar-image pairs of equal length r; each pair counts once in pos[r].
struct CycleType {
  int n = 0;
  std::map<int, int> pos;  // r -> number of positive r-cycles
  std::map<int, int> neg;  // r -> number of negative r-cycles
  bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const SignedPerm& g);
bool is_conjugate(const SignedPerm& a, const SignedPerm& b);

BigInt group_order(int n);  // 2^n n!
BigInt centralizer_order(const CycleType& t);
BigInt class_size(const CycleType& t);

std::vector<CycleType> all_cycle_types(int n);
std::string format_cycle_type(const CycleType& t);

// Named elements.  Blocks are the consecutive runs {(j-1)p+1, ..., jp}.
SignedPerm make_f(int a, int n);        // a disjoint positive 2-cycles i <-> i+a
SignedPerm make_sigma(int j, int p, int n);  // p-cycle on block j (and its bars)
SignedPerm make_tau(int j, int p, int n);    // bar flip on block j
SignedPerm make_rho(int i, int p, int n);    // swap blocks i and i+1 pointwise
SignedPerm make_z(int r, int p, int n);      // blockwise x |-> x(i-1)+1 twist, x a primitive root

bool is_odd_prime(int p);
int least_primitive_root(int p);

// Generating sets for the subgroups attached to R_r = <sigma_1 ... sigma_r>.
std::vector<SignedPerm> r_subgroup_gens(int r, int p, int n);
std::vector<SignedPerm> normalizer_gens(int r, int p, int n);
std::vector<SignedPerm> base_centralizer_gens(int r, int p, int n);

// Size of <gens> by breadth-first closure; aborts with a limit error once the
// element count exceeds cap.
BigInt group_closure_order(const std::vector<SignedPerm>& gens, long long cap);

// Cycle notation: "(1 2)(1- 2-)"; a trailing '-' bars the symbol.  Parsing is
// whitespace-insensitive and accepts commas between entries.  Cycles whose
// bar-image is omitted are completed automatically; conflicting data is an
// error.  print-then-parse is exact.
std::string to_cycles(const SignedPerm& g);
SignedPerm parse_cycles(const std::string& text, int n);

}  // namespace hyperoct
