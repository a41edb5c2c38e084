#include <doctest.h>

#include <vector>

#include "qtype/errors.hpp"
#include "qtype/young.hpp"

using qtype::BigInt;
using qtype::int_pow;
namespace yg = qtype::young;

namespace {

yg::YoungDiagram diagram(std::vector<int> parts) { return yg::YoungDiagram{std::move(parts)}; }

// partitions of n into at most d parts, counted by the standard recurrence
long long partition_count(int n, int d) {
  std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(d + 1, 0));
  for (int k = 0; k <= d; ++k) p[0][k] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= d; ++k)
      p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
  return p[n][d];
}

}  // namespace

TEST_CASE("enumerate_diagrams lists partitions in decreasing lexicographic order") {
  const auto family = yg::enumerate_diagrams(2, 2);
  REQUIRE(family.diagrams.size() == 2);
  CHECK(family.diagrams[0] == diagram({2, 0}));
  CHECK(family.diagrams[1] == diagram({1, 1}));

  const auto empty = yg::enumerate_diagrams(0, 3);
  REQUIRE(empty.diagrams.size() == 1);
  CHECK(empty.diagrams[0] == diagram({0, 0, 0}));

  const auto quads = yg::enumerate_diagrams(4, 2);
  REQUIRE(quads.diagrams.size() == 3);
  CHECK(quads.diagrams[0] == diagram({4, 0}));
  CHECK(quads.diagrams[1] == diagram({3, 1}));
  CHECK(quads.diagrams[2] == diagram({2, 2}));
}

TEST_CASE("enumeration count matches the partition recurrence") {
  for (int d = 1; d <= 6; ++d)
    for (int n = 0; n <= 14; ++n)
      CHECK(static_cast<long long>(yg::enumerate_diagrams(n, d).diagrams.size()) ==
            partition_count(n, d));
}

TEST_CASE("enumerate_diagrams with d = 1") {
  for (int n = 1; n <= 10; ++n) {
    const auto family = yg::enumerate_diagrams(n, 1);
    REQUIRE(family.diagrams.size() == 1);
    CHECK(family.diagrams[0] == diagram({n}));
    CHECK(yg::schur_weyl_multiplicity(family.diagrams[0], 1) == 1);
  }
}

TEST_CASE("schur_weyl_multiplicity on known diagrams") {
  CHECK(yg::schur_weyl_multiplicity(diagram({2, 0}), 2) == 3);
  CHECK(yg::schur_weyl_multiplicity(diagram({1, 1}), 2) == 1);
  CHECK(yg::schur_weyl_multiplicity(diagram({2, 1, 0}), 3) == 8);
}

TEST_CASE("multiplicity survives zero-row padding") {
  // same diagram, growing ambient d: never zero, matches the reference rows
  CHECK(yg::schur_weyl_multiplicity(diagram({2}), 3) == 6);
  CHECK(yg::schur_weyl_multiplicity(diagram({2, 0, 0, 0}), 4) == 10);
  CHECK(yg::schur_weyl_multiplicity(diagram({2, 1}), 4) == 20);
  CHECK(yg::schur_weyl_multiplicity(diagram({1, 1, 1}), 5) == 10);
  for (int d = 2; d <= 8; ++d)
    CHECK(yg::schur_weyl_multiplicity(diagram({2, 1}), d) > 0);
}

TEST_CASE("d = 2 multiplicity is lambda1 - lambda2 + 1") {
  for (int n = 1; n <= 20; ++n)
    for (const auto& dg : yg::enumerate_diagrams(n, 2).diagrams)
      CHECK(yg::schur_weyl_multiplicity(dg, 2) == dg.parts[0] - dg.parts[1] + 1);
}

TEST_CASE("hook_dimension") {
  CHECK(yg::hook_dimension(diagram({1})) == 1);
  CHECK(yg::hook_dimension(diagram({2, 1})) == 2);   // hooks 3,1,1
  CHECK(yg::hook_dimension(diagram({2, 2})) == 2);   // hooks 3,2,2,1
  CHECK(yg::hook_dimension(diagram({3, 2})) == 5);
  CHECK_THROWS_AS(yg::hook_dimension(diagram({0, 0})), std::invalid_argument);
}

TEST_CASE("Schur-Weyl completeness: sum of m * dim U is d^n") {
  for (int d = 1; d <= 6; ++d) {
    for (int n = 1; n <= 8; ++n) {
      BigInt total = 0;
      for (const auto& dg : yg::enumerate_diagrams(n, d).diagrams)
        total += yg::schur_weyl_multiplicity(dg, d) * yg::hook_dimension(dg);
      CHECK(total == int_pow(d, n));
    }
  }
}

TEST_CASE("enumerate_ystar keeps only height >= 2 diagrams") {
  const auto d2 = yg::enumerate_ystar(2, 3);
  REQUIRE(d2.size() == 2);
  CHECK(d2[0] == diagram({1, 1}));
  CHECK(d2[1] == diagram({2, 1}));

  CHECK(yg::enumerate_ystar(2, 2) == std::vector<yg::YoungDiagram>{diagram({1, 1})});

  const auto d3 = yg::enumerate_ystar(3, 3);
  REQUIRE(d3.size() == 3);
  CHECK(d3[0] == diagram({1, 1, 0}));
  CHECK(d3[1] == diagram({2, 1, 0}));
  CHECK(d3[2] == diagram({1, 1, 1}));
}

TEST_CASE("diagram display trims zero rows") {
  CHECK(yg::to_display_string(diagram({4, 2, 0})) == "(4,2)");
  CHECK(yg::to_display_string(diagram({1, 1})) == "(1,1)");
  CHECK(yg::to_display_string(diagram({0, 0})) == "()");
}

TEST_CASE("padding validates the height") {
  CHECK(diagram({2, 1}).padded(4).parts == std::vector<int>{2, 1, 0, 0});
  CHECK_THROWS_AS(diagram({2, 1, 1}).padded(2), std::invalid_argument);
}
