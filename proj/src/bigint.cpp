#include "hyperoct/bigint.hpp"

#include "hyperoct/error.hpp"

namespace hyperoct {

BigInt factorial(int n) {
  require(n >= 0, "factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  require(n >= 0, "binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

BigInt ipow(int base, int exp) {
  require(exp >= 0, "ipow with negative exponent");
  BigInt r = 1, b = base;
  for (int i = 0; i < exp; ++i) r *= b;
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  require(den != 0, "division by zero", errc::internal);
  BigInt q = num / den;
  require(q * den == num, "inexact division in a formula that must divide evenly",
          errc::internal);
  return q;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace hyperoct
