#include "qtype/bigint.hpp"

#include <sstream>
#include <stdexcept>

#include "qtype/errors.hpp"

namespace qtype {

BigInt int_pow(const BigInt& base, long exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  if (den == 0) throw InternalError(std::string(context) + ": division by zero");
  BigInt q = num / den;
  if (q * den != num) {
    std::ostringstream msg;
    msg << context << ": " << num << " is not divisible by " << den;
    throw InternalError(msg.str());
  }
  return q;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace qtype
