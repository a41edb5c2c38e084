#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtype::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  long long checked = 0;  // rows / cells / tuples examined
  std::string detail;     // first failure, empty when passed
};

/// Grid overrides for the verification sweeps. Each check keeps its own
/// default bound; a set override replaces that default.
struct Limits {
  std::optional<int> n_max;
  std::optional<int> d_max;
  std::uint64_t seed = 0;
  std::int64_t cap = 1024;
};

enum class Suite { tables, oracle, cycles, identities, all };

Suite suite_from_string(const std::string& text);
std::string to_string(Suite suite);

std::vector<CheckResult> run_suite(Suite suite, const Limits& limits = {});

/// Reference decompositions of unordered pairs, triples and quads for
/// d = 2..10; cell 0 marks a blank (diagram taller than d).
struct GoldenTable {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> column_diagrams;  // trimmed parts per column
  struct Row {
    int d = 0;
    std::vector<long long> cells;
  };
  std::vector<Row> rows;
};

const std::vector<GoldenTable>& golden_tables();

}  // namespace qtype::verify
