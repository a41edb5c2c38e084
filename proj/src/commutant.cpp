#include "qtype/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qtype/errors.hpp"

namespace qtype::commutant {

namespace {

struct UnionFind {
  std::vector<std::int64_t> parent;

  explicit UnionFind(std::int64_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), std::int64_t{0});
  }
  std::int64_t find(std::int64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

/// index_map[r] = where g sends basis ket r.
std::vector<std::int64_t> index_map(const perm::Permutation& g, int d,
                                    std::int64_t ambient) {
  std::vector<std::int64_t> map(ambient);
  for (std::int64_t r = 0; r < ambient; ++r)
    map[r] = perm::act_on_index(g, perm::TensorBasisIndex::from_linear(r, g.size(), d))
                 .to_linear(d);
  return map;
}

double uniform_1_2(std::mt19937_64& rng) {
  // top 53 bits -> [0, 1); identical across platforms for a fixed seed
  return 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CommutantBasis pair_orbits(const perm::PermutationGroup& group, int d,
                           std::int64_t cap) {
  if (d < 1) throw std::invalid_argument("pair_orbits: d must be >= 1");
  const BigInt ambient_exact = int_pow(d, group.n);
  if (ambient_exact > cap) {
    std::ostringstream msg;
    msg << "pair_orbits: ambient dimension d^n = " << ambient_exact
        << " exceeds cap = " << cap;
    throw CapExceededError(msg.str());
  }
  const std::int64_t ambient = ambient_exact.convert_to<std::int64_t>();

  UnionFind uf(ambient * ambient);
  for (const auto& g : group.generators) {
    const auto map = index_map(g, d, ambient);
    for (std::int64_t r = 0; r < ambient; ++r)
      for (std::int64_t c = 0; c < ambient; ++c)
        uf.unite(r * ambient + c, map[r] * ambient + map[c]);
  }

  CommutantBasis basis;
  basis.ambient = ambient;
  basis.d = d;
  basis.group = group;
  basis.orbit_of.assign(ambient * ambient, -1);
  // roots appear in increasing pair-id order, so orbit indices and members
  // come out sorted and the whole construction is deterministic
  for (std::int64_t id = 0; id < ambient * ambient; ++id) {
    const std::int64_t root = uf.find(id);
    std::int32_t orbit;
    if (basis.orbit_of[root] == -1) {
      orbit = static_cast<std::int32_t>(basis.orbits.size());
      basis.orbit_of[root] = orbit;
      basis.orbits.push_back(PairOrbit{{root / ambient, root % ambient}, {}});
    } else {
      orbit = basis.orbit_of[root];
    }
    basis.orbit_of[id] = orbit;
    basis.orbits[orbit].members.emplace_back(id / ambient, id % ambient);
  }

  const BigInt expected = commutant_dimension_via_character(group, d);
  if (expected != BigInt(basis.orbits.size())) {
    std::ostringstream msg;
    msg << "pair_orbits: orbit count " << basis.orbits.size()
        << " disagrees with the character identity " << expected;
    throw InternalError(msg.str());
  }
  return basis;
}

ComplexMatrix generic_element(const CommutantBasis& basis, std::uint64_t seed) {
  const std::int64_t ambient = basis.ambient;
  ComplexMatrix element = ComplexMatrix::Zero(ambient, ambient);
  std::mt19937_64 rng(seed);
  for (const auto& orbit : basis.orbits) {
    const double half = uniform_1_2(rng) / 2.0;
    for (const auto& [row, col] : orbit.members) {
      element(row, col) += half;
      element(col, row) += half;
    }
  }
  // exact by construction: each entry is (r_o + r_o')/2 for the orbit and
  // its transpose, accumulated in identical order across an orbit
  for (const auto& orbit : basis.orbits) {
    const auto reference = element(orbit.representative.first, orbit.representative.second);
    for (const auto& [row, col] : orbit.members) {
      if (element(row, col) != reference)
        throw InternalError("generic_element: element is not constant on an orbit");
      if (element(row, col) != element(col, row))
        throw InternalError("generic_element: element is not Hermitian");
    }
  }
  return element;
}

BigInt commutant_dimension_via_character(const perm::PermutationGroup& group, int d) {
  BigInt sum = 0;
  for (const auto& g : group.elements) {
    const BigInt chi = perm::permutation_character(g, d);
    sum += chi * chi;
  }
  return exact_div(sum, BigInt(group.order()), "character inner product (chi, chi)");
}

ComplexMatrix BlockSpectrum::cluster_projector(int cluster) const {
  const auto& c = clusters.at(cluster);
  const auto vectors = eigenvectors.middleCols(c.first_column, c.multiplicity);
  return vectors * vectors.adjoint();
}

std::vector<BigInt> BlockSpectrum::dimension_multiset() const {
  std::vector<BigInt> dims;
  dims.reserve(blocks.size());
  for (const auto& block : blocks) dims.push_back(block.block_size);
  std::sort(dims.begin(), dims.end());
  return dims;
}

namespace {

std::vector<EigenvalueCluster> cluster_eigenvalues(const Eigen::VectorXd& values,
                                                   double tol) {
  const auto count = values.size();
  const double range = values(count - 1) - values(0);
  const double threshold = tol * range;
  std::vector<EigenvalueCluster> clusters;
  int start = 0;
  for (int i = 1; i <= count; ++i) {
    if (i == count || values(i) - values(i - 1) > threshold) {
      clusters.push_back(EigenvalueCluster{values.segment(start, i - start).mean(),
                                           i - start, start});
      start = i;
    }
  }
  return clusters;
}

struct AttemptFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BlockSpectrum attempt_decompose(const CommutantBasis& basis, std::uint64_t seed,
                                const DecomposeOptions& options) {
  BlockSpectrum spectrum;
  spectrum.ambient = basis.ambient;

  const ComplexMatrix element = generic_element(basis, seed);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(element);
  if (solver.info() != Eigen::Success)
    throw AttemptFailure("eigendecomposition did not converge");
  spectrum.eigenvalues = solver.eigenvalues();
  spectrum.eigenvectors = solver.eigenvectors();
  spectrum.clusters = cluster_eigenvalues(spectrum.eigenvalues, options.tol);

  // Linkage through a second, independently seeded element Y of E: clusters
  // i, j lie in the same matrix block exactly when P_i E P_j != 0, and a
  // generic Y has P_i Y P_j != 0 precisely there (up to the measure-zero
  // coefficient collisions the reseed policy covers).
  const ComplexMatrix link_element =
      generic_element(basis, seed ^ 0x9e3779b97f4a7c15ULL);
  const ComplexMatrix overlap = spectrum.eigenvectors.adjoint() *
                                (link_element * spectrum.eigenvectors);

  const int cluster_count = static_cast<int>(spectrum.clusters.size());
  UnionFind components(cluster_count);
  for (int i = 0; i < cluster_count; ++i) {
    for (int j = i + 1; j < cluster_count; ++j) {
      const auto& ci = spectrum.clusters[i];
      const auto& cj = spectrum.clusters[j];
      const double strength = overlap
                                  .block(ci.first_column, cj.first_column,
                                         ci.multiplicity, cj.multiplicity)
                                  .cwiseAbs()
                                  .maxCoeff();
      if (strength > options.tol_link) components.unite(i, j);
    }
  }

  std::vector<int> component_of(cluster_count);
  std::vector<int> root_to_block;
  for (int i = 0; i < cluster_count; ++i) {
    const auto root = components.find(i);
    const auto it = std::find(root_to_block.begin(), root_to_block.end(), root);
    if (it == root_to_block.end()) {
      component_of[i] = static_cast<int>(root_to_block.size());
      root_to_block.push_back(static_cast<int>(root));
      spectrum.blocks.push_back(WedderburnBlock{});
    } else {
      component_of[i] = static_cast<int>(it - root_to_block.begin());
    }
    auto& block = spectrum.blocks[component_of[i]];
    block.cluster_indices.push_back(i);
    block.block_size += 1;
  }

  for (auto& block : spectrum.blocks) {
    const int shared = spectrum.clusters[block.cluster_indices.front()].multiplicity;
    for (int cluster : block.cluster_indices) {
      if (spectrum.clusters[cluster].multiplicity != shared)
        throw AttemptFailure("cluster multiplicities differ within one component");
    }
    block.irrep_dim = shared;
  }

  BigInt dim_total = 0;
  BigInt sq_total = 0;
  for (const auto& block : spectrum.blocks) {
    dim_total += BigInt(block.block_size) * block.irrep_dim;
    sq_total += BigInt(block.block_size) * block.block_size;
  }
  if (dim_total != BigInt(basis.ambient))
    throw AttemptFailure("sum of m*s does not reach the ambient dimension d^n");
  if (sq_total != BigInt(basis.orbits.size()))
    throw AttemptFailure("sum of m^2 does not match the commutant dimension");
  spectrum.commutant_dim = sq_total;
  return spectrum;
}

}  // namespace

BlockSpectrum decompose(const perm::PermutationGroup& group, int d,
                        const DecomposeOptions& options) {
  const CommutantBasis basis = pair_orbits(group, d, options.cap);
  std::string last_failure;
  for (int attempt = 0; attempt <= options.max_reseeds; ++attempt) {
    try {
      return attempt_decompose(basis, options.seed + attempt, options);
    } catch (const AttemptFailure& failure) {
      last_failure = failure.what();
    }
  }
  std::ostringstream msg;
  msg << "decompose: spectrum still degenerate after " << options.max_reseeds
      << " reseeds (" << last_failure << ")";
  throw DegenerateSpectrumError(msg.str());
}

decomp::AlgebraDecomposition to_algebra_decomposition(const BlockSpectrum& spectrum,
                                                      int n, int d) {
  decomp::AlgebraDecomposition out;
  out.kind = decomp::Kind::subgroup;
  out.n = n;
  out.d = d;
  std::vector<std::pair<int, int>> sizes;  // (m, s)
  sizes.reserve(spectrum.blocks.size());
  for (const auto& block : spectrum.blocks)
    sizes.emplace_back(block.block_size, block.irrep_dim);
  std::sort(sizes.begin(), sizes.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second > b.second;
  });
  for (std::size_t i = 0; i < sizes.size(); ++i)
    out.blocks.push_back(
        {BigInt(sizes[i].first), decomp::IndexLabel{static_cast<int>(i)}});
  return out;
}

}  // namespace qtype::commutant
