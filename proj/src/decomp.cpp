#include "qtype/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtype/errors.hpp"
#include "qtype/numtheory.hpp"

namespace qtype::decomp {

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::unordered: return "unordered";
    case Kind::cycle: return "cycle";
    case Kind::words: return "words";
    case Kind::subgroup: return "subgroup";
  }
  throw InternalError("to_string: unknown kind");
}

Kind kind_from_string(const std::string& text) {
  if (text == "unordered") return Kind::unordered;
  if (text == "cycle") return Kind::cycle;
  if (text == "words") return Kind::words;
  if (text == "subgroup") return Kind::subgroup;
  throw std::invalid_argument("unknown decomposition kind: '" + text + "'");
}

bool AlgebraDecomposition::operator==(const AlgebraDecomposition& other) const {
  return kind == other.kind && n == other.n && d == other.d &&
         truncated_at == other.truncated_at &&
         has_boundedoperators_summand == other.has_boundedoperators_summand &&
         blocks == other.blocks;
}

std::vector<BigInt> AlgebraDecomposition::dimension_multiset() const {
  std::vector<BigInt> dims;
  dims.reserve(blocks.size());
  for (const auto& block : blocks) dims.push_back(block.dimension);
  std::sort(dims.begin(), dims.end());
  return dims;
}

namespace {

void require_at_least(int value, int min, const char* who, const char* name) {
  if (value < min) {
    std::ostringstream msg;
    msg << who << ": " << name << " must be >= " << min;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

AlgebraDecomposition unordered_tuple(int n, int d) {
  require_at_least(n, 1, "unordered_tuple", "n");
  require_at_least(d, 1, "unordered_tuple", "d");
  AlgebraDecomposition out;
  out.kind = Kind::unordered;
  out.n = n;
  out.d = d;
  for (const auto& diagram : young::enumerate_diagrams(n, d).diagrams)
    out.blocks.push_back({young::schur_weyl_multiplicity(diagram, d), diagram});
  return out;
}

AlgebraDecomposition qubit_closed_form(int n) {
  require_at_least(n, 1, "qubit_closed_form", "n");
  AlgebraDecomposition out;
  out.kind = Kind::unordered;
  out.n = n;
  out.d = 2;
  // m runs over 1,3,...,n+1 (n even) or 2,4,...,n+1 (n odd); the diagram
  // with that block size is ((n+m-1)/2, (n-m+1)/2).
  for (int m = (n % 2 == 0) ? 1 : 2; m <= n + 1; m += 2) {
    young::YoungDiagram diagram{{(n + m - 1) / 2, (n - m + 1) / 2}};
    out.blocks.push_back({BigInt(m), std::move(diagram)});
  }
  return out;
}

std::vector<BigInt> cycle_multiplicities(int n, int d) {
  require_at_least(n, 1, "cycle_multiplicities", "n");
  require_at_least(d, 1, "cycle_multiplicities", "d");
  const auto divs = numtheory::divisors(n);
  std::vector<BigInt> mults;
  mults.reserve(n);
  for (int k = 0; k < n; ++k) {
    BigInt sum = 0;
    for (const BigInt& l : divs) {
      const long quotient = BigInt(n / l).convert_to<long>();
      sum += int_pow(d, quotient) * numtheory::ramanujan_sum_holder(l, k);
    }
    BigInt c = exact_div(sum, n, "cycle multiplicity");
    if (c < 0) {
      std::ostringstream msg;
      msg << "cycle multiplicity c_" << k << " is negative for n=" << n << ", d=" << d;
      throw InternalError(msg.str());
    }
    mults.push_back(std::move(c));
  }
  return mults;
}

AlgebraDecomposition cycle(int n, int d) {
  AlgebraDecomposition out;
  out.kind = Kind::cycle;
  out.n = n;
  out.d = d;
  const auto mults = cycle_multiplicities(n, d);
  for (int k = 0; k < n; ++k) {
    Block block{mults[k], IndexLabel{k}};
    if (mults[k] == 0)
      out.vanishing.push_back(std::move(block));
    else
      out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<long long> cycle_dft_oracle(int n, int d) {
  require_at_least(n, 1, "cycle_dft_oracle", "n");
  require_at_least(d, 1, "cycle_dft_oracle", "d");
  const double ambient = std::pow(static_cast<double>(d), n);
  const double tolerance = 1e-6 * ambient;
  std::vector<long long> mults(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const int g = std::gcd(j, n);  // gcd(0, n) == n
      const double magnitude = std::pow(static_cast<double>(d), g);
      const long long phase = static_cast<long long>(j) * k % n;
      sum += std::polar(magnitude, 2.0 * std::numbers::pi *
                                       static_cast<double>(phase) /
                                       static_cast<double>(n));
    }
    sum /= static_cast<double>(n);
    const double rounded = std::round(sum.real());
    if (std::abs(sum.imag()) > tolerance ||
        std::abs(sum.real() - rounded) > tolerance) {
      std::ostringstream msg;
      msg << "cycle_dft_oracle: c_" << k << " = (" << sum.real() << ", "
          << sum.imag() << "i) does not round within 1e-6 * d^n";
      throw RoundingError(msg.str());
    }
    mults[k] = static_cast<long long>(rounded);
  }
  return mults;
}

std::vector<BigInt> cycle_prime_closed_form(int n, int d) {
  require_at_least(d, 1, "cycle_prime_closed_form", "d");
  if (!numtheory::is_prime(n))
    throw std::invalid_argument("cycle_prime_closed_form: n must be prime");
  const BigInt dn = int_pow(d, n);
  std::vector<BigInt> mults;
  mults.reserve(n);
  // both divisions are exact by Fermat's little theorem
  mults.push_back(exact_div(dn + BigInt(n - 1) * d, n, "prime cycle c_0"));
  const BigInt rest = exact_div(dn - d, n, "prime cycle c_k");
  for (int k = 1; k < n; ++k) mults.push_back(rest);
  return mults;
}

BigInt necklace_count(int n, int d) {
  require_at_least(n, 1, "necklace_count", "n");
  require_at_least(d, 1, "necklace_count", "d");
  BigInt sum = 0;
  for (const BigInt& l : numtheory::divisors(n)) {
    const long exponent = l.convert_to<long>();
    sum += int_pow(d, exponent) * numtheory::totient(n / l);
  }
  return exact_div(sum, n, "necklace count");
}

AlgebraDecomposition unordered_words(int d, int max_n) {
  require_at_least(d, 1, "unordered_words", "d");
  require_at_least(max_n, 2, "unordered_words", "max_n");
  AlgebraDecomposition out;
  out.kind = Kind::words;
  out.d = d;
  out.truncated_at = max_n;
  out.has_boundedoperators_summand = true;
  for (const auto& diagram : young::enumerate_ystar(d, max_n))
    out.blocks.push_back({young::schur_weyl_multiplicity(diagram, d), diagram});
  return out;
}

}  // namespace qtype::decomp
