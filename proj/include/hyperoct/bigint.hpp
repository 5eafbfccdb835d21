#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hyperoct {

// All counting in this library is exact; fixed-width overflow is a bug.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt ipow(int base, int exp);

// Quotient that must be exact; a remainder means a broken formula somewhere.
BigInt exact_div(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);

}  // namespace hyperoct
