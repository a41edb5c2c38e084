#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qtype/bigint.hpp"
#include "qtype/young.hpp"

// Closed-form matrix-block decompositions of the permutation-symmetric
// quantum types: unordered n-tuples of d-level systems (Schur-Weyl), the
// qubit special case, n-cycles (Ramanujan sums), and unordered words
// truncated at a box count. Each closed form has an independent oracle
// route next to it; agreement between the two is part of the test suite.

namespace qtype::decomp {

enum class Kind { unordered, cycle, words, subgroup };

std::string to_string(Kind kind);
Kind kind_from_string(const std::string& text);

/// Character index for cycle blocks, opaque component index for subgroup
/// blocks found by the spectral oracle.
struct IndexLabel {
  int value = 0;
  auto operator<=>(const IndexLabel&) const = default;
};

using BlockLabel = std::variant<young::YoungDiagram, IndexLabel>;

/// One full matrix algebra summand M_dimension.
struct Block {
  BigInt dimension;
  BlockLabel label;
  bool operator==(const Block&) const = default;
};

struct AlgebraDecomposition {
  Kind kind = Kind::unordered;
  std::optional<int> n;            // tuple length; absent for words
  int d = 1;                       // local dimension
  std::optional<int> truncated_at; // words only: box-count truncation
  bool has_boundedoperators_summand = false;  // symbolic B(l^2) summand
  std::vector<Block> blocks;

  /// Labels whose multiplicity came out 0 (possible for cycles, e.g. d=1).
  /// Diagnostics only: M_0 is not a summand, and this list is neither
  /// serialized nor part of equality.
  std::vector<Block> vanishing;

  bool operator==(const AlgebraDecomposition& other) const;

  /// Block dimensions sorted ascending, for multiset comparisons.
  std::vector<BigInt> dimension_multiset() const;
};

/// One block M_{m_lambda} per n-box diagram of height <= d.
AlgebraDecomposition unordered_tuple(int n, int d);

/// d = 2 special case without diagram enumeration:
/// M_1 (+) M_3 (+) ... (+) M_{n+1} for even n, M_2 (+) M_4 (+) ... for odd.
AlgebraDecomposition qubit_closed_form(int n);

/// All n cycle multiplicities c_k in k order, k = 0..n-1, via Hoelder's
/// Ramanujan-sum form. Entries can be zero.
std::vector<BigInt> cycle_multiplicities(int n, int d);

/// Cycle decomposition with blocks labeled by character index; vanishing
/// multiplicities are excluded from blocks and kept as diagnostics.
AlgebraDecomposition cycle(int n, int d);

/// The same multiplicities by the literal DFT sum
///   c_k = (1/n) sum_j omega^{jk} d^{gcd(j,n)}
/// in complex doubles, rounded. Oracle route only; throws RoundingError
/// when a value sits farther than 1e-6 * d^n from an integer.
std::vector<long long> cycle_dft_oracle(int n, int d);

/// Prime-n shortcut: c_0 = (d^n + (n-1)d)/n and c_k = (d^n - d)/n for
/// k > 0. Throws std::invalid_argument when n is not prime.
std::vector<BigInt> cycle_prime_closed_form(int n, int d);

/// Number of n-bead necklaces over d colors, (1/n) sum_{l|n} d^l phi(n/l);
/// equals the k = 0 cycle multiplicity.
BigInt necklace_count(int n, int d);

/// Truncated unordered-words algebra: the symbolic B(l^2) summand plus one
/// block per height >= 2 diagram with at most max_n boxes. Increasing
/// max_n only appends blocks.
AlgebraDecomposition unordered_words(int d, int max_n);

}  // namespace qtype::decomp
