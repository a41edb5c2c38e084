#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qtype/bigint.hpp"

// Exact integer number theory backing the cycle decompositions: divisor
// sums, Euler's totient, the Moebius function, and Ramanujan sums c_l(k)
// both as the defining root-of-unity sum and via Hoelder's closed form.
// Factorization is plain trial division; inputs here stay small.

namespace qtype::numtheory {

/// Divisors of n in increasing order (first 1, last n). Requires n >= 1.
std::vector<BigInt> divisors(const BigInt& n);

/// Prime factorization as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

bool is_prime(const BigInt& n);

/// Euler's totient: number of 1 <= h <= n coprime to n.
BigInt totient(const BigInt& n);

/// 0 when n has a squared prime factor, otherwise (-1)^(#prime factors).
int moebius(const BigInt& n);

/// Ramanujan sum c_l(k) as the literal sum of e(hk/l) over residues h
/// coprime to l. Double-precision oracle only; the imaginary part is
/// mathematically zero and the production path never calls this.
std::complex<double> ramanujan_sum_direct(long l, long k);

/// Ramanujan sum by Hoelder's formula:
///   c_l(k) = mu(l/g) * phi(l) / phi(l/g),  g = gcd(l, k).
/// The division is exact; inexactness throws InternalError.
BigInt ramanujan_sum_holder(const BigInt& l, const BigInt& k);

}  // namespace qtype::numtheory
