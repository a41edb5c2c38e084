#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qtype/bigint.hpp"

// Explicit permutation groups and their action on the d^n tensor basis.
// Points are 1-based in all user-facing text (cycle notation "(1 2 3)")
// and 0-based in storage. The basis action sends digit pi^-1(j) to slot j,
// which makes it a left action; every downstream module assumes this
// convention.

namespace qtype::perm {

class Permutation {
 public:
  /// From 0-based images; validates that they form a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Accepts disjoint-cycle notation "(1 2 3)(4 5)" (points 1-based,
  /// separated by spaces or commas, "()" for the identity) and one-line
  /// image notation "2 3 1 5 4". Pass n to fix the number of points;
  /// n = -1 infers it (largest point seen; required for "()").
  static Permutation parse(const std::string& text, int n = -1);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  /// this after other: (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  /// Number of cycles on points; fixed points count as 1-cycles.
  int cycle_count() const;

  /// Canonical disjoint-cycle string, 1-based, fixed points omitted,
  /// identity rendered "()".
  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct PermutationGroup {
  int n = 0;
  std::vector<Permutation> elements;   // identity first, then BFS order
  std::vector<Permutation> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

/// Breadth-first closure of the generators under composition. Element
/// order is the BFS insertion order starting from the identity and the
/// sorted generators, so it is deterministic. Throws CapExceededError when
/// the closure grows past max_order, std::invalid_argument on mixed sizes.
PermutationGroup close_group(std::vector<Permutation> generators,
                             std::size_t max_order = 10080);

PermutationGroup trivial_group(int n);
PermutationGroup cyclic_group(int n);
PermutationGroup symmetric_group(int n);

/// Base-d digit string of a basis ket |i_1 ... i_n>; digit 0 is i_1 and is
/// the most significant digit of the linear encoding.
struct TensorBasisIndex {
  std::vector<int> digits;

  static TensorBasisIndex from_linear(std::int64_t index, int n, int d);
  std::int64_t to_linear(int d) const;

  bool operator==(const TensorBasisIndex&) const = default;
};

/// |i_1 ... i_n> -> |i_{pi^-1(1)} ... i_{pi^-1(n)}>: output digit j is the
/// input digit at pi^-1(j), so act(pi o tau, x) = act(pi, act(tau, x)).
TensorBasisIndex act_on_index(const Permutation& pi, const TensorBasisIndex& index);

int cycle_count(const Permutation& pi);

/// Character of the basis-permuting representation at pi: d^(cycle count),
/// which equals the number of basis kets fixed by pi.
BigInt permutation_character(const Permutation& pi, int d);

}  // namespace qtype::perm
