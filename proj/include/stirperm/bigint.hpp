#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "stirperm/error.hpp"

namespace stirperm {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient extended to all integer arguments: zero for b < 0,
/// zero for 0 <= a < b, and (-1)^b * binom(b - a - 1, b) for a < 0.
BigInt binom(long long a, long long b);

/// num / den, throwing DivisibilityError when the remainder is nonzero.
BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& context);

BigInt factorial(unsigned n);
BigInt double_factorial_odd(unsigned n);  // (2n-1)!!, with value 1 at n = 0

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace stirperm
