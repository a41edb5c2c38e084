#include "qtype/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qtype/commutant.hpp"
#include "qtype/decomp.hpp"
#include "qtype/numtheory.hpp"
#include "qtype/perm.hpp"
#include "qtype/young.hpp"

namespace qtype::verify {

Suite suite_from_string(const std::string& text) {
  if (text == "tables") return Suite::tables;
  if (text == "oracle") return Suite::oracle;
  if (text == "cycles") return Suite::cycles;
  if (text == "identities") return Suite::identities;
  if (text == "all") return Suite::all;
  throw std::invalid_argument("unknown verify suite: '" + text + "'");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::tables: return "tables";
    case Suite::oracle: return "oracle";
    case Suite::cycles: return "cycles";
    case Suite::identities: return "identities";
    case Suite::all: return "all";
  }
  return "?";
}

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = {
      {"pairs",
       2,
       {{2}, {1, 1}},
       {{2, {3, 1}},
        {3, {6, 3}},
        {4, {10, 6}},
        {5, {15, 10}},
        {6, {21, 15}},
        {7, {28, 21}},
        {8, {36, 28}},
        {9, {45, 36}},
        {10, {55, 45}}}},
      {"triples",
       3,
       {{3}, {2, 1}, {1, 1, 1}},
       {{2, {4, 2, 0}},
        {3, {10, 8, 1}},
        {4, {20, 20, 4}},
        {5, {35, 40, 10}},
        {6, {56, 70, 20}},
        {7, {84, 112, 35}},
        {8, {120, 168, 56}},
        {9, {165, 240, 84}},
        {10, {220, 330, 120}}}},
      {"quads",
       4,
       {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}},
       {{2, {5, 3, 1, 0, 0}},
        {3, {15, 15, 6, 3, 0}},
        {4, {35, 45, 20, 15, 1}},
        {5, {70, 105, 50, 45, 5}},
        {6, {126, 210, 105, 105, 15}},
        {7, {210, 378, 196, 210, 35}},
        {8, {330, 630, 336, 378, 70}},
        {9, {495, 990, 540, 630, 126}},
        {10, {715, 1485, 825, 990, 210}}}}};
  return tables;
}

namespace {

/// Collects the first failure and a unit count for one named check.
class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void count(long long units = 1) { result_.checked += units; }

  void require(bool condition, const std::string& message) {
    if (condition || !result_.passed) return;
    result_.passed = false;
    result_.detail = message;
  }

  CheckResult take() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string describe(const std::vector<BigInt>& dims) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ',';
    os << dims[i];
  }
  os << '}';
  return os.str();
}

CheckResult check_golden_table(const GoldenTable& table, std::string name) {
  Recorder rec(std::move(name));
  for (const auto& row : table.rows) {
    for (std::size_t col = 0; col < table.column_diagrams.size(); ++col) {
      const young::YoungDiagram diagram{table.column_diagrams[col]};
      const int height = static_cast<int>(table.column_diagrams[col].size());
      std::ostringstream where;
      where << table.name << " d=" << row.d << " column " << young::to_display_string(diagram);
      if (height > row.d) {
        rec.require(row.cells[col] == 0, where.str() + ": expected a blank cell");
        continue;
      }
      const BigInt m = young::schur_weyl_multiplicity(diagram, row.d);
      rec.require(m == row.cells[col],
                  where.str() + ": formula gives " + m.str() + ", table has " +
                      std::to_string(row.cells[col]));
    }
    // the whole row must equal the unordered-tuple decomposition, labels included
    const auto decomposition = decomp::unordered_tuple(table.n, row.d);
    std::size_t next_cell = 0;
    bool row_matches = decomposition.blocks.size() <=
                       table.column_diagrams.size();
    for (const auto& block : decomposition.blocks) {
      while (next_cell < row.cells.size() && row.cells[next_cell] == 0) ++next_cell;
      if (next_cell >= row.cells.size() || block.dimension != row.cells[next_cell] ||
          std::get<young::YoungDiagram>(block.label).trimmed() !=
              table.column_diagrams[next_cell]) {
        row_matches = false;
        break;
      }
      ++next_cell;
    }
    while (next_cell < row.cells.size() && row.cells[next_cell] == 0) ++next_cell;
    row_matches = row_matches && next_cell == row.cells.size();
    rec.require(row_matches, table.name + " d=" + std::to_string(row.d) +
                                 ": row does not match unordered_tuple");
    rec.count();  // one unit per table row
  }
  return std::move(rec).take();
}

CheckResult check_action_composition(const Limits&) {
  Recorder rec("action-composition");
  std::mt19937 rng(0xA5EED);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int d = 1 + static_cast<int>(rng() % 3);
    std::vector<int> a(n), b(n);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const perm::Permutation pi(a), tau(b);
    perm::TensorBasisIndex x;
    x.digits.resize(n);
    for (int& digit : x.digits) digit = static_cast<int>(rng() % d);
    const auto composed = perm::act_on_index(pi.compose(tau), x);
    const auto stepwise = perm::act_on_index(pi, perm::act_on_index(tau, x));
    rec.require(composed == stepwise,
                "act(pi o tau, x) != act(pi, act(tau, x)) at trial " +
                    std::to_string(trial));
    rec.count();
  }
  return std::move(rec).take();
}

CheckResult check_character_fixed_points(const Limits&) {
  Recorder rec("character-fixed-points");
  std::mt19937 rng(0xF1CED);
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; std::pow(d, n) <= 4096.0; ++n) {
      const std::int64_t ambient = BigInt(int_pow(d, n)).convert_to<std::int64_t>();
      std::vector<perm::Permutation> sample;
      if (n <= 5) {
        sample = perm::symmetric_group(n).elements;
      } else {
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 0);
        for (int i = 0; i < 25; ++i) {
          std::shuffle(images.begin(), images.end(), rng);
          sample.emplace_back(images);
        }
      }
      for (const auto& pi : sample) {
        std::int64_t fixed = 0;
        for (std::int64_t index = 0; index < ambient; ++index) {
          const auto basis = perm::TensorBasisIndex::from_linear(index, n, d);
          if (perm::act_on_index(pi, basis) == basis) ++fixed;
        }
        rec.require(perm::permutation_character(pi, d) == fixed,
                    "character != fixed-point count for " + pi.to_cycle_string() +
                        " at d=" + std::to_string(d));
        rec.count();
      }
    }
  }
  // the cycle special case chi(pi^i) = d^gcd(i, n)
  for (int n = 1; n <= 12; ++n) {
    const auto group = perm::cyclic_group(n);
    for (int d = 1; d <= 4; ++d) {
      perm::Permutation power = perm::Permutation::identity(n);
      const auto& step = group.generators.front();
      for (int i = 0; i < n; ++i) {
        rec.require(perm::permutation_character(power, d) ==
                        int_pow(d, std::gcd(i, n)),
                    "chi(pi^i) != d^gcd(i,n) at n=" + std::to_string(n));
        rec.count();
        power = power.compose(step);
      }
    }
  }
  return std::move(rec).take();
}

std::vector<std::pair<std::string, perm::PermutationGroup>> small_group_zoo() {
  std::vector<std::pair<std::string, perm::PermutationGroup>> zoo;
  for (int n = 2; n <= 4; ++n)
    zoo.emplace_back("S_" + std::to_string(n), perm::symmetric_group(n));
  for (int n = 2; n <= 8; ++n)
    zoo.emplace_back("C_" + std::to_string(n), perm::cyclic_group(n));
  zoo.emplace_back("V_4", perm::close_group({perm::Permutation::parse("(1 2)(3 4)"),
                                             perm::Permutation::parse("(1 3)(2 4)")}));
  zoo.emplace_back("<(1 2)> in S_3",
                   perm::close_group({perm::Permutation::parse("(1 2)", 3)}));
  return zoo;
}

CheckResult check_equalizer_membership(const Limits& limits) {
  Recorder rec("equalizer-membership");
  for (const auto& [label, group] : small_group_zoo()) {
    if (group.order() > 24) continue;
    for (int d = 2; d <= 4; ++d) {
      if (std::pow(d, group.n) > 256.0) continue;
      const auto basis = commutant::pair_orbits(group, d, limits.cap);
      const std::int64_t ambient = basis.ambient;
      for (const auto& g : group.elements) {
        std::vector<std::int64_t> map(ambient);
        for (std::int64_t r = 0; r < ambient; ++r)
          map[r] = perm::act_on_index(
                       g, perm::TensorBasisIndex::from_linear(r, group.n, d))
                       .to_linear(d);
        bool invariant = true;
        for (std::int64_t r = 0; r < ambient && invariant; ++r)
          for (std::int64_t c = 0; c < ambient; ++c)
            if (basis.orbit_index(map[r], map[c]) != basis.orbit_index(r, c)) {
              invariant = false;
              break;
            }
        rec.require(invariant, label + ", d=" + std::to_string(d) +
                                   ": an orbit indicator moves under " +
                                   g.to_cycle_string());
        rec.count();
      }
    }
  }
  return std::move(rec).take();
}

CheckResult check_oracle_unordered(const Limits& limits) {
  Recorder rec("oracle-vs-schur-weyl");
  const int d_max = limits.d_max.value_or(3);
  const int n_max = limits.n_max.value_or(5);
  std::vector<std::pair<int, int>> grid;  // (d, n)
  for (int d = 1; d <= d_max; ++d)
    for (int n = 1; n <= n_max; ++n) grid.emplace_back(d, n);
  if (d_max >= 2 && n_max == 5) grid.emplace_back(2, 6);
  for (const auto& [d, n] : grid) {
    const auto group = perm::symmetric_group(n);
    commutant::DecomposeOptions options;
    options.seed = limits.seed;
    options.cap = limits.cap;
    const auto spectrum = commutant::decompose(group, d, options);
    const auto expected = decomp::unordered_tuple(n, d).dimension_multiset();
    const auto got = spectrum.dimension_multiset();
    rec.require(got == expected, "S_" + std::to_string(n) + ", d=" + std::to_string(d) +
                                     ": oracle " + describe(got) + " != formula " +
                                     describe(expected));
    rec.require(spectrum.commutant_dim ==
                    commutant::commutant_dimension_via_character(group, d),
                "S_" + std::to_string(n) + ", d=" + std::to_string(d) +
                    ": sum of m^2 differs from the character identity");
    rec.count();
  }
  return std::move(rec).take();
}

CheckResult check_oracle_cycle(const Limits& limits) {
  Recorder rec("oracle-vs-cycle-formula");
  const int d_max = limits.d_max.value_or(3);
  const int n_max = limits.n_max.value_or(5);
  for (int d = 1; d <= d_max; ++d) {
    for (int n = 1; n <= n_max; ++n) {
      commutant::DecomposeOptions options;
      options.seed = limits.seed;
      options.cap = limits.cap;
      const auto spectrum = commutant::decompose(perm::cyclic_group(n), d, options);
      const auto expected = decomp::cycle(n, d).dimension_multiset();
      const auto got = spectrum.dimension_multiset();
      rec.require(got == expected, "C_" + std::to_string(n) + ", d=" +
                                       std::to_string(d) + ": oracle " + describe(got) +
                                       " != formula " + describe(expected));
      rec.count();
    }
  }
  return std::move(rec).take();
}

CheckResult check_seed_invariance(const Limits& limits) {
  Recorder rec("oracle-seed-invariance");
  const std::vector<std::pair<std::string, std::pair<perm::PermutationGroup, int>>>
      cases = {{"S_2, d=2", {perm::symmetric_group(2), 2}},
               {"S_3, d=2", {perm::symmetric_group(3), 2}},
               {"C_3, d=2", {perm::cyclic_group(3), 2}},
               {"C_4, d=3", {perm::cyclic_group(4), 3}},
               {"V_4, d=2",
                {perm::close_group({perm::Permutation::parse("(1 2)(3 4)"),
                                    perm::Permutation::parse("(1 3)(2 4)")}),
                 2}}};
  for (const auto& [label, problem] : cases) {
    const auto& [group, d] = problem;
    std::vector<std::vector<BigInt>> multisets;
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
      commutant::DecomposeOptions options;
      options.seed = seed;
      options.cap = limits.cap;
      multisets.push_back(commutant::decompose(group, d, options).dimension_multiset());
    }
    rec.require(multisets[0] == multisets[1] && multisets[1] == multisets[2],
                label + ": block multiset depends on the seed");
    rec.count();
  }
  return std::move(rec).take();
}

CheckResult check_holder_vs_dft(const Limits& limits) {
  Recorder rec("holder-vs-dft");
  const int n_max = limits.n_max.value_or(12);
  const int d_max = limits.d_max.value_or(5);
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 1; d <= d_max; ++d) {
      const auto closed = decomp::cycle_multiplicities(n, d);
      const auto oracle = decomp::cycle_dft_oracle(n, d);
      for (int k = 0; k < n; ++k) {
        rec.require(closed[k] == oracle[k],
                    "n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                        ", k=" + std::to_string(k) + ": Hoelder " + closed[k].str() +
                        " != DFT " + std::to_string(oracle[k]));
        rec.count();
      }
    }
  }
  return std::move(rec).take();
}

CheckResult check_prime_closed_form(const Limits& limits) {
  Recorder rec("prime-closed-form");
  const int d_max = limits.d_max.value_or(5);
  for (int n : {2, 3, 5, 7, 11, 13}) {
    if (limits.n_max && n > *limits.n_max) continue;
    for (int d = 1; d <= d_max; ++d) {
      const auto shortcut = decomp::cycle_prime_closed_form(n, d);
      const auto general = decomp::cycle_multiplicities(n, d);
      rec.require(shortcut == general,
                  "n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                      ": prime shortcut disagrees with the Ramanujan form");
      rec.count();
    }
  }
  return std::move(rec).take();
}

CheckResult check_cycle_dimension_sum(const Limits& limits) {
  Recorder rec("cycle-dimension-sum");
  const int n_max = limits.n_max.value_or(12);
  const int d_max = limits.d_max.value_or(5);
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 1; d <= d_max; ++d) {
      BigInt total = 0;
      for (const auto& c : decomp::cycle_multiplicities(n, d)) total += c;
      rec.require(total == int_pow(d, n),
                  "n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                      ": sum of c_k != d^n");
      rec.count();
    }
  }
  return std::move(rec).take();
}

CheckResult check_necklace_c0(const Limits& limits) {
  Recorder rec("necklace-equals-c0");
  const int n_max = limits.n_max.value_or(12);
  const int d_max = limits.d_max.value_or(5);
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 1; d <= d_max; ++d) {
      rec.require(decomp::necklace_count(n, d) == decomp::cycle_multiplicities(n, d)[0],
                  "n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                      ": necklace count != c_0");
      rec.count();
    }
  }
  return std::move(rec).take();
}

/// Independent route: canonical-rotation enumeration of all d^n strings.
long long brute_force_necklaces(int n, int d) {
  std::set<std::vector<int>> canonical;
  std::vector<int> word(n, 0);
  while (true) {
    std::vector<int> best = word;
    std::vector<int> rotated = word;
    for (int shift = 1; shift < n; ++shift) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      best = std::min(best, rotated);
    }
    canonical.insert(best);
    int slot = n - 1;
    while (slot >= 0 && word[slot] == d - 1) word[slot--] = 0;
    if (slot < 0) break;
    ++word[slot];
  }
  return static_cast<long long>(canonical.size());
}

CheckResult check_necklace_brute_force(const Limits&) {
  Recorder rec("necklace-brute-force");
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= 3; ++d) {
      rec.require(decomp::necklace_count(n, d) == brute_force_necklaces(n, d),
                  "n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                      ": formula disagrees with rotation-orbit enumeration");
      rec.count();
    }
  }
  return std::move(rec).take();
}

CheckResult check_mobius_divisor_sum(const Limits& limits) {
  Recorder rec("mobius-divisor-sum");
  const int n_max = limits.n_max.value_or(200);
  for (int n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (const auto& l : numtheory::divisors(n)) sum += numtheory::moebius(l);
    rec.require(sum == (n == 1 ? 1 : 0),
                "sum of mu over divisors of " + std::to_string(n) + " is " + sum.str());
    rec.count();
  }
  return std::move(rec).take();
}

CheckResult check_totient_divisor_sum(const Limits& limits) {
  Recorder rec("totient-divisor-sum");
  const int n_max = limits.n_max.value_or(200);
  for (int n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (const auto& l : numtheory::divisors(n)) sum += numtheory::totient(l);
    rec.require(sum == n, "sum of phi over divisors of " + std::to_string(n) +
                              " is " + sum.str());
    rec.count();
  }
  return std::move(rec).take();
}

CheckResult check_holder_vs_direct(const Limits& limits) {
  Recorder rec("holder-vs-direct");
  const int bound = limits.n_max.value_or(64);
  for (int l = 1; l <= bound; ++l) {
    for (int k = 0; k <= bound; ++k) {
      const auto direct = numtheory::ramanujan_sum_direct(l, k);
      const double rounded = std::round(direct.real());
      rec.require(std::abs(direct.imag()) < 1e-9,
                  "c_" + std::to_string(l) + "(" + std::to_string(k) +
                      "): imaginary residue too large");
      rec.require(std::abs(direct.real() - rounded) < 1e-7,
                  "c_" + std::to_string(l) + "(" + std::to_string(k) +
                      "): real part does not round");
      rec.require(numtheory::ramanujan_sum_holder(l, k) ==
                      BigInt(static_cast<long long>(rounded)),
                  "c_" + std::to_string(l) + "(" + std::to_string(k) +
                      "): Hoelder != direct sum");
      rec.count();
    }
  }
  return std::move(rec).take();
}

CheckResult check_ramanujan_at_zero(const Limits& limits) {
  Recorder rec("ramanujan-at-zero");
  const int bound = limits.n_max.value_or(64);
  for (int l = 1; l <= bound; ++l) {
    rec.require(numtheory::ramanujan_sum_holder(l, 0) == numtheory::totient(l),
                "c_" + std::to_string(l) + "(0) != phi(" + std::to_string(l) + ")");
    rec.count();
  }
  return std::move(rec).take();
}

CheckResult check_schur_weyl_completeness(const Limits& limits) {
  Recorder rec("schur-weyl-completeness");
  const int d_max = limits.d_max.value_or(6);
  const int n_max = limits.n_max.value_or(8);
  for (int d = 1; d <= d_max; ++d) {
    for (int n = 1; n <= n_max; ++n) {
      BigInt total = 0;
      for (const auto& diagram : young::enumerate_diagrams(n, d).diagrams)
        total += young::schur_weyl_multiplicity(diagram, d) *
                 young::hook_dimension(diagram);
      rec.require(total == int_pow(d, n),
                  "d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                      ": sum of m_lambda * dim U_lambda != d^n");
      rec.count();
    }
  }
  return std::move(rec).take();
}

CheckResult check_qubit_specialization(const Limits& limits) {
  Recorder rec("qubit-closed-form");
  const int n_max = limits.n_max.value_or(20);
  for (int n = 1; n <= n_max; ++n) {
    const auto closed = decomp::qubit_closed_form(n);
    const auto general = decomp::unordered_tuple(n, 2);
    rec.require(closed.dimension_multiset() == general.dimension_multiset(),
                "n=" + std::to_string(n) + ": qubit closed form != unordered tuple");
    for (const auto& block : general.blocks) {
      const auto rows = std::get<young::YoungDiagram>(block.label).padded(2).parts;
      rec.require(block.dimension == rows[0] - rows[1] + 1,
                  "n=" + std::to_string(n) + ": d=2 multiplicity is not l1 - l2 + 1");
    }
    rec.count();
  }
  return std::move(rec).take();
}

CheckResult check_words_prefix_stability(const Limits& limits) {
  Recorder rec("words-prefix-stability");
  const int d_max = limits.d_max.value_or(3);
  const int n_max = limits.n_max.value_or(8);
  for (int d = 1; d <= d_max; ++d) {
    for (int max_n = 2; max_n < n_max; ++max_n) {
      const auto shorter = decomp::unordered_words(d, max_n);
      const auto longer = decomp::unordered_words(d, max_n + 1);
      const bool prefix =
          shorter.blocks.size() <= longer.blocks.size() &&
          std::equal(shorter.blocks.begin(), shorter.blocks.end(), longer.blocks.begin());
      rec.require(prefix, "d=" + std::to_string(d) + ": truncation at " +
                              std::to_string(max_n + 1) + " does not extend " +
                              std::to_string(max_n));
      rec.count();
    }
  }
  return std::move(rec).take();
}

CheckResult check_words_truncation(const Limits&) {
  Recorder rec("words-truncation");
  const auto expect = [&rec](int d, int max_n,
                             const std::vector<std::pair<long long, std::vector<int>>>&
                                 blocks) {
    const auto words = decomp::unordered_words(d, max_n);
    bool good = words.has_boundedoperators_summand &&
                words.truncated_at == max_n &&
                words.blocks.size() == blocks.size();
    for (std::size_t i = 0; good && i < blocks.size(); ++i) {
      good = words.blocks[i].dimension == blocks[i].first &&
             std::get<young::YoungDiagram>(words.blocks[i].label).trimmed() ==
                 blocks[i].second;
    }
    rec.require(good, "unordered_words(" + std::to_string(d) + ", " +
                          std::to_string(max_n) + ") has unexpected blocks");
    rec.count();
  };
  expect(2, 2, {{1, {1, 1}}});
  expect(2, 4, {{1, {1, 1}}, {2, {2, 1}}, {3, {3, 1}}, {1, {2, 2}}});
  expect(3, 3, {{3, {1, 1}}, {8, {2, 1}}, {1, {1, 1, 1}}});
  return std::move(rec).take();
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const Limits& limits) {
  std::vector<CheckResult> results;
  const auto run_tables = [&] {
    const auto& tables = golden_tables();
    results.push_back(check_golden_table(tables[0], "table-1a-pairs"));
    results.push_back(check_golden_table(tables[1], "table-1b-triples"));
    results.push_back(check_golden_table(tables[2], "table-1c-quads"));
  };
  const auto run_oracle = [&] {
    results.push_back(check_action_composition(limits));
    results.push_back(check_character_fixed_points(limits));
    results.push_back(check_equalizer_membership(limits));
    results.push_back(check_oracle_unordered(limits));
    results.push_back(check_oracle_cycle(limits));
    results.push_back(check_seed_invariance(limits));
  };
  const auto run_cycles = [&] {
    results.push_back(check_holder_vs_dft(limits));
    results.push_back(check_prime_closed_form(limits));
    results.push_back(check_cycle_dimension_sum(limits));
    results.push_back(check_necklace_c0(limits));
    results.push_back(check_necklace_brute_force(limits));
  };
  const auto run_identities = [&] {
    results.push_back(check_mobius_divisor_sum(limits));
    results.push_back(check_totient_divisor_sum(limits));
    results.push_back(check_holder_vs_direct(limits));
    results.push_back(check_ramanujan_at_zero(limits));
    results.push_back(check_schur_weyl_completeness(limits));
    results.push_back(check_qubit_specialization(limits));
    results.push_back(check_words_prefix_stability(limits));
    results.push_back(check_words_truncation(limits));
  };
  switch (suite) {
    case Suite::tables: run_tables(); break;
    case Suite::oracle: run_oracle(); break;
    case Suite::cycles: run_cycles(); break;
    case Suite::identities: run_identities(); break;
    case Suite::all:
      run_tables();
      run_oracle();
      run_cycles();
      run_identities();
      break;
  }
  return results;
}

}  // namespace qtype::verify
