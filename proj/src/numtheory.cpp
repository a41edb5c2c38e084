#include "qtype/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qtype/errors.hpp"

namespace qtype::numtheory {

namespace {

void require_positive(const BigInt& n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": argument must be >= 1");
}

}  // namespace

std::vector<BigInt> divisors(const BigInt& n) {
  require_positive(n, "divisors");
  std::vector<BigInt> small, large;
  for (BigInt i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  require_positive(n, "factorize");
  std::vector<std::pair<BigInt, unsigned>> factors;
  BigInt m = n;
  for (BigInt p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  return factors;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (BigInt p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

BigInt totient(const BigInt& n) {
  require_positive(n, "totient");
  BigInt phi = n;
  for (const auto& [p, e] : factorize(n)) {
    phi /= p;
    phi *= p - 1;
  }
  return phi;
}

int moebius(const BigInt& n) {
  require_positive(n, "moebius");
  int parity = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    parity = -parity;
  }
  return parity;
}

std::complex<double> ramanujan_sum_direct(long l, long k) {
  if (l < 1) throw std::invalid_argument("ramanujan_sum_direct: l must be >= 1");
  if (k < 0) throw std::invalid_argument("ramanujan_sum_direct: k must be >= 0");
  std::complex<double> sum = 0.0;
  for (long h = 1; h <= l; ++h) {
    if (std::gcd(h, l) != 1) continue;
    // reduce h*k mod l before the angle so the argument stays small
    long r = (h % l) * (k % l) % l;
    sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(l));
  }
  return sum;
}

BigInt ramanujan_sum_holder(const BigInt& l, const BigInt& k) {
  require_positive(l, "ramanujan_sum_holder");
  if (k < 0) throw std::invalid_argument("ramanujan_sum_holder: k must be >= 0");
  const BigInt g = boost::multiprecision::gcd(l, k);  // gcd(l, 0) == l
  const BigInt q = l / g;
  const int mu = moebius(q);
  if (mu == 0) return 0;
  return mu * exact_div(totient(l), totient(q), "Hoelder's formula");
}

}  // namespace qtype::numtheory
