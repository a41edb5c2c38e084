#include <doctest.h>

#include <cmath>
#include <numeric>

#include "qtype/numtheory.hpp"

using qtype::BigInt;
namespace nt = qtype::numtheory;

namespace {

// independent oracles, deliberately dumber than the implementations
std::vector<long> divisors_by_scan(long n) {
  std::vector<long> out;
  for (long i = 1; i <= n; ++i)
    if (n % i == 0) out.push_back(i);
  return out;
}

long totient_by_count(long n) {
  long count = 0;
  for (long h = 1; h <= n; ++h)
    if (std::gcd(h, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("divisors") {
  CHECK(nt::divisors(1) == std::vector<BigInt>{1});
  CHECK(nt::divisors(12) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
  CHECK(nt::divisors(7) == std::vector<BigInt>{1, 7});
  for (long n = 1; n <= 120; ++n) {
    const auto got = nt::divisors(n);
    const auto expected = divisors_by_scan(n);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
  }
}

TEST_CASE("totient") {
  CHECK(nt::totient(1) == 1);
  CHECK(nt::totient(9) == 6);
  CHECK(nt::totient(12) == 4);
  for (long n = 1; n <= 120; ++n) CHECK(nt::totient(n) == totient_by_count(n));
}

TEST_CASE("moebius") {
  CHECK(nt::moebius(1) == 1);
  CHECK(nt::moebius(4) == 0);
  CHECK(nt::moebius(6) == 1);
  CHECK(nt::moebius(30) == -1);
  CHECK(nt::moebius(12) == 0);
}

TEST_CASE("moebius and totient divisor sums") {
  for (long n = 1; n <= 200; ++n) {
    BigInt mu_sum = 0, phi_sum = 0;
    for (const auto& l : nt::divisors(n)) {
      mu_sum += nt::moebius(l);
      phi_sum += nt::totient(l);
    }
    CHECK(mu_sum == (n == 1 ? 1 : 0));
    CHECK(phi_sum == n);
  }
}

TEST_CASE("is_prime by trial division") {
  CHECK_FALSE(nt::is_prime(1));
  CHECK(nt::is_prime(2));
  CHECK(nt::is_prime(13));
  CHECK_FALSE(nt::is_prime(91));  // 7 * 13
}

TEST_CASE("ramanujan sum, direct form") {
  CHECK(nt::ramanujan_sum_direct(1, 5).real() == doctest::Approx(1.0));
  CHECK(nt::ramanujan_sum_direct(4, 0).real() == doctest::Approx(2.0));
  CHECK(nt::ramanujan_sum_direct(4, 2).real() == doctest::Approx(-2.0));
}

TEST_CASE("ramanujan sum, Hoelder form") {
  CHECK(nt::ramanujan_sum_holder(1, 0) == 1);
  CHECK(nt::ramanujan_sum_holder(4, 2) == -2);
  CHECK(nt::ramanujan_sum_holder(6, 0) == 2);
}

TEST_CASE("Hoelder matches the direct sum for l, k <= 64") {
  for (long l = 1; l <= 64; ++l) {
    for (long k = 0; k <= 64; ++k) {
      const auto direct = nt::ramanujan_sum_direct(l, k);
      REQUIRE(std::abs(direct.imag()) < 1e-9);
      const double rounded = std::round(direct.real());
      REQUIRE(std::abs(direct.real() - rounded) < 1e-7);
      CHECK(nt::ramanujan_sum_holder(l, k) == BigInt(static_cast<long long>(rounded)));
    }
  }
}

TEST_CASE("c_l(0) equals the totient") {
  for (long l = 1; l <= 64; ++l) CHECK(nt::ramanujan_sum_holder(l, 0) == nt::totient(l));
}

TEST_CASE("arguments below 1 are rejected") {
  CHECK_THROWS_AS(nt::divisors(0), std::invalid_argument);
  CHECK_THROWS_AS(nt::totient(0), std::invalid_argument);
  CHECK_THROWS_AS(nt::moebius(0), std::invalid_argument);
  CHECK_THROWS_AS(nt::ramanujan_sum_holder(0, 1), std::invalid_argument);
}
