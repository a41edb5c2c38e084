#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qtype/bigint.hpp"
#include "qtype/decomp.hpp"
#include "qtype/perm.hpp"

// Brute-force oracle for the commutant E = {a : rho(g)^-1 a rho(g) = a}
// of a permutation action on the d^n tensor basis. A conjugation-invariant
// matrix is constant on the orbits of G acting diagonally on index pairs,
// so the orbit indicator matrices are an exact basis of E. The full block
// structure is then recovered numerically: eigenvalue clusters of a seeded
// generic Hermitian element of E are the minimal projections, and clusters
// joined by E form one matrix block of size (#clusters) with the shared
// cluster multiplicity as the irrep dimension.

namespace qtype::commutant {

using ComplexMatrix = Eigen::MatrixXcd;

/// One orbit of G on (row, col) index pairs; representative is the
/// smallest pair, members are sorted.
struct PairOrbit {
  std::pair<std::int64_t, std::int64_t> representative;
  std::vector<std::pair<std::int64_t, std::int64_t>> members;
};

struct CommutantBasis {
  std::vector<PairOrbit> orbits;
  std::vector<std::int32_t> orbit_of;  // orbit index per pair id r * ambient + c
  std::int64_t ambient = 0;            // d^n
  int d = 1;
  perm::PermutationGroup group;

  std::size_t dimension() const { return orbits.size(); }
  std::int32_t orbit_index(std::int64_t row, std::int64_t col) const {
    return orbit_of[row * ambient + col];
  }
};

/// Partition of all d^n x d^n index pairs into orbits under the generators
/// of G. The orbit count is cross-checked exactly against the character
/// identity (1/|G|) sum_g chi(g)^2; a mismatch throws InternalError.
/// Throws CapExceededError when d^n > cap.
CommutantBasis pair_orbits(const perm::PermutationGroup& group, int d,
                           std::int64_t cap = 1024);

/// X = sum_o r_o (A_o + A_o^T)/2 with A_o the orbit indicators and r_o
/// drawn uniformly from [1, 2] by a seeded generator. Symmetrization maps
/// indicators to sums of at most two indicators, so X lies in E exactly;
/// exact Hermiticity and orbit-constancy are asserted. Same seed, same
/// matrix, bit for bit.
ComplexMatrix generic_element(const CommutantBasis& basis, std::uint64_t seed);

/// Exact commutant dimension (1/|G|) sum_g chi(g)^2.
BigInt commutant_dimension_via_character(const perm::PermutationGroup& group, int d);

struct EigenvalueCluster {
  double value = 0.0;
  int multiplicity = 0;
  int first_column = 0;  // column range [first_column, first_column + multiplicity)
};

struct WedderburnBlock {
  int block_size = 0;  // m: number of clusters in the component
  int irrep_dim = 0;   // s: the multiplicity shared by those clusters
  std::vector<int> cluster_indices;
};

struct BlockSpectrum {
  std::vector<EigenvalueCluster> clusters;
  std::vector<WedderburnBlock> blocks;
  std::int64_t ambient = 0;
  BigInt commutant_dim;  // sum of m^2, verified against the character identity
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix cluster_projector(int cluster) const;
  std::vector<BigInt> dimension_multiset() const;  // block sizes m, ascending
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  double tol = 1e-8;       // eigenvalue gap threshold, relative to spectral range
  double tol_link = 1e-8;  // cluster linkage threshold on max-entry magnitude
  std::int64_t cap = 1024;
  int max_reseeds = 3;
};

/// Full numerical Artin-Wedderburn decomposition of E. Deterministic for a
/// fixed seed; reseeds up to max_reseeds times when an eigenvalue collision
/// breaks the equal-multiplicity invariant, then throws
/// DegenerateSpectrumError.
BlockSpectrum decompose(const perm::PermutationGroup& group, int d,
                        const DecomposeOptions& options = {});

/// Package a spectrum as a subgroup-kind decomposition: blocks sorted by
/// descending dimension, labeled with their component index.
decomp::AlgebraDecomposition to_algebra_decomposition(const BlockSpectrum& spectrum,
                                                      int n, int d);

}  // namespace qtype::commutant
