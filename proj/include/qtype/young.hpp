#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qtype/bigint.hpp"

// Young diagrams label the matrix blocks of the unordered-tuple algebras.
// Two dimension formulas live here: the Weyl product formula for the
// Schur-Weyl multiplicity m_lambda (the block size), and the hook length
// formula for the symmetric-group irrep dimension (used as the partner
// factor in the d^n completeness identity).

namespace qtype::young {

/// Weakly decreasing row lengths, kept zero-padded to the ambient number
/// of rows d so the product formula can index every pair 1 <= i < j <= d.
struct YoungDiagram {
  std::vector<int> parts;

  int boxes() const;
  int height() const;  // number of nonzero rows
  bool weakly_decreasing() const;

  /// Same diagram padded (or trimmed of zero rows) to exactly d parts.
  /// Throws std::invalid_argument when the height exceeds d.
  YoungDiagram padded(int d) const;

  /// Parts with trailing zero rows removed.
  std::vector<int> trimmed() const;

  auto operator<=>(const YoungDiagram&) const = default;
};

/// "(4,2)" -- zero rows are suppressed in display only, "()" when empty.
std::string to_display_string(const YoungDiagram& diagram);

struct DiagramFamily {
  int n = 0;
  int d = 0;
  std::vector<YoungDiagram> diagrams;
};

/// The partitions of n into at most d parts, zero-padded to length d and
/// listed in decreasing lexicographic order. This order is fixed; golden
/// outputs depend on it.
DiagramFamily enumerate_diagrams(int n, int d);

/// dim V_lambda = prod_{1 <= i < j <= d} (lambda_i - lambda_j + j - i) / (j - i).
/// Accumulated as a single big-integer fraction and divided once at the
/// end; the quotient is exact by Weyl's formula.
BigInt schur_weyl_multiplicity(const YoungDiagram& diagram, int d);

/// dim U_lambda = n! / prod(hook lengths). Exact division.
BigInt hook_dimension(const YoungDiagram& diagram);

/// Diagrams with 2 <= boxes <= max_n, height between 2 and d, ordered by
/// box count and then decreasing lexicographically within each count.
std::vector<YoungDiagram> enumerate_ystar(int d, int max_n);

}  // namespace qtype::young
