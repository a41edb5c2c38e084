#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qtype {

// All block dimensions and counting formulas are evaluated in arbitrary
// precision; nothing in the closed-form path may silently overflow.
using BigInt = boost::multiprecision::cpp_int;

/// base^exp for exp >= 0.
BigInt int_pow(const BigInt& base, long exp);

/// Exact quotient num/den. Throws InternalError when den does not divide
/// num; `context` names the formula whose exactness guarantee broke.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);

BigInt factorial(int n);

}  // namespace qtype
