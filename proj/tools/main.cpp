#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtype/commutant.hpp"
#include "qtype/decomp.hpp"
#include "qtype/errors.hpp"
#include "qtype/json_io.hpp"
#include "qtype/perm.hpp"
#include "qtype/render.hpp"
#include "qtype/verify.hpp"
#include "qtype/young.hpp"

// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 computational
// failure (cap exceeded, degenerate spectrum). Data goes to stdout,
// diagnostics to stderr.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputational = 3;

std::int64_t resolve_cap(const CLI::Option* cap_option, std::int64_t cap_flag) {
  if (cap_option->count() > 0) return cap_flag;
  if (const char* env = std::getenv("QTYPE_CAP")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("QTYPE_CAP is not an integer: '" + std::string(env) + "'");
    }
  }
  return cap_flag;
}

struct DecomposeArgs {
  std::string kind;
  std::optional<int> n;
  int d = 0;
  std::optional<int> max_n;
  std::vector<std::string> generators;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::int64_t cap = 1024;
  double tol = 1e-8;
  bool ascii = false;
};

std::vector<qtype::perm::Permutation> parse_generators(
    const std::vector<std::string>& specs, int n) {
  std::vector<qtype::perm::Permutation> generators;
  for (const auto& spec : specs) {
    std::string piece;
    std::istringstream in(spec);
    while (std::getline(in, piece, ';')) {
      if (piece.find_first_not_of(" \t") == std::string::npos) continue;
      generators.push_back(qtype::perm::Permutation::parse(piece, n));
    }
  }
  if (generators.empty())
    throw std::invalid_argument("subgroup kind needs at least one generator");
  return generators;
}

void print_decomposition(const qtype::decomp::AlgebraDecomposition& decomposition,
                         const std::string& format, bool ascii) {
  if (format == "json") {
    std::cout << qtype::json_io::emit(decomposition);
  } else if (format == "csv") {
    std::cout << qtype::render::csv(decomposition);
  } else {
    std::cout << qtype::render::text(decomposition, ascii);
  }
  if (!decomposition.vanishing.empty()) {
    std::cerr << "note: vanishing multiplicities at";
    for (const auto& block : decomposition.vanishing)
      std::cerr << ' ' << qtype::render::label_string(block, decomposition.kind);
    std::cerr << "\n";
  }
}

int run_decompose(const DecomposeArgs& args) {
  using qtype::decomp::Kind;
  const Kind kind = qtype::decomp::kind_from_string(args.kind);
  qtype::decomp::AlgebraDecomposition decomposition;
  switch (kind) {
    case Kind::unordered:
      if (!args.n) throw std::invalid_argument("kind 'unordered' requires --n");
      decomposition = qtype::decomp::unordered_tuple(*args.n, args.d);
      break;
    case Kind::cycle:
      if (!args.n) throw std::invalid_argument("kind 'cycle' requires --n");
      decomposition = qtype::decomp::cycle(*args.n, args.d);
      break;
    case Kind::words:
      if (!args.max_n) throw std::invalid_argument("kind 'words' requires --max-n");
      decomposition = qtype::decomp::unordered_words(args.d, *args.max_n);
      break;
    case Kind::subgroup: {
      if (!args.n) throw std::invalid_argument("kind 'subgroup' requires --n");
      if (args.generators.empty())
        throw std::invalid_argument("kind 'subgroup' requires --generators");
      const auto group =
          qtype::perm::close_group(parse_generators(args.generators, *args.n));
      qtype::commutant::DecomposeOptions options;
      options.seed = args.seed;
      options.cap = args.cap;
      options.tol = args.tol;
      options.tol_link = args.tol;
      const auto spectrum = qtype::commutant::decompose(group, args.d, options);
      decomposition = qtype::commutant::to_algebra_decomposition(spectrum, *args.n, args.d);
      break;
    }
  }
  print_decomposition(decomposition, args.format, args.ascii);
  return kExitOk;
}

struct TablesArgs {
  std::string which;
  int d_max = 10;
  std::string format = "text";
  bool ascii = false;
};

int run_tables(const TablesArgs& args) {
  int n = 0;
  if (args.which == "pairs") n = 2;
  else if (args.which == "triples") n = 3;
  else if (args.which == "quads") n = 4;
  else throw std::invalid_argument("tables: expected pairs, triples or quads");
  if (args.d_max < 2) throw std::invalid_argument("tables: --d-max must be >= 2");

  const auto columns = qtype::young::enumerate_diagrams(n, n).diagrams;
  // cells[row][col]; -1 marks a blank (diagram taller than d)
  std::vector<std::vector<qtype::BigInt>> cells;
  for (int d = 2; d <= args.d_max; ++d) {
    std::vector<qtype::BigInt> row;
    for (const auto& diagram : columns)
      row.push_back(diagram.height() <= d
                        ? qtype::young::schur_weyl_multiplicity(diagram, d)
                        : qtype::BigInt(-1));
    cells.push_back(std::move(row));
  }

  if (args.format == "json") {
    nlohmann::ordered_json root;
    root["which"] = args.which;
    root["n"] = n;
    root["d_max"] = args.d_max;
    root["columns"] = nlohmann::ordered_json::array();
    for (const auto& diagram : columns) root["columns"].push_back(diagram.trimmed());
    root["rows"] = nlohmann::ordered_json::array();
    for (int d = 2; d <= args.d_max; ++d) {
      nlohmann::ordered_json row;
      row["d"] = d;
      row["cells"] = nlohmann::ordered_json::array();
      for (const auto& cell : cells[d - 2]) {
        if (cell < 0)
          row["cells"].push_back(nullptr);
        else
          row["cells"].push_back(cell.convert_to<std::int64_t>());
      }
      root["rows"].push_back(std::move(row));
    }
    std::cout << root.dump(2) << "\n";
    return kExitOk;
  }

  if (args.format == "csv") {
    std::cout << "kind,n,d,label,dim\n";
    for (int d = 2; d <= args.d_max; ++d)
      for (std::size_t col = 0; col < columns.size(); ++col)
        if (cells[d - 2][col] >= 0)
          std::cout << "unordered," << n << ',' << d << ",\""
                    << qtype::young::to_display_string(columns[col]) << "\","
                    << cells[d - 2][col] << "\n";
    return kExitOk;
  }

  // text: column-aligned table, blank cells where the diagram is too tall
  std::vector<std::string> headers{"d"};
  for (const auto& diagram : columns)
    headers.push_back(qtype::young::to_display_string(diagram));
  std::vector<std::vector<std::string>> body;
  for (int d = 2; d <= args.d_max; ++d) {
    std::vector<std::string> row{std::to_string(d)};
    for (const auto& cell : cells[d - 2])
      row.push_back(cell < 0 ? "" : cell.str());
    body.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(headers.size());
  for (std::size_t col = 0; col < headers.size(); ++col) {
    widths[col] = headers[col].size();
    for (const auto& row : body) widths[col] = std::max(widths[col], row[col].size());
  }
  std::cout << "unordered " << args.which << " (n = " << n << ")\n";
  const auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t col = 0; col < row.size(); ++col)
      std::cout << (col ? "  " : "") << std::setw(static_cast<int>(widths[col]))
                << row[col];
    std::cout << "\n";
  };
  print_row(headers);
  for (const auto& row : body) print_row(row);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n_max;
  std::optional<int> d_max;
  std::uint64_t seed = 0;
  std::int64_t cap = 1024;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  qtype::verify::Limits limits;
  limits.n_max = args.n_max;
  limits.d_max = args.d_max;
  limits.seed = args.seed;
  limits.cap = args.cap;
  const auto results =
      qtype::verify::run_suite(qtype::verify::suite_from_string(args.suite), limits);

  bool all_passed = true;
  long long total = 0;
  for (const auto& result : results) {
    all_passed = all_passed && result.passed;
    total += result.checked;
  }

  if (args.format == "json") {
    nlohmann::ordered_json root;
    root["suite"] = args.suite;
    root["all_passed"] = all_passed;
    root["checks"] = nlohmann::ordered_json::array();
    for (const auto& result : results) {
      nlohmann::ordered_json entry;
      entry["name"] = result.name;
      entry["passed"] = result.passed;
      entry["checked"] = result.checked;
      if (!result.detail.empty()) entry["detail"] = result.detail;
      root["checks"].push_back(std::move(entry));
    }
    std::cout << root.dump(2) << "\n";
  } else {
    for (const auto& result : results) {
      std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << std::left
                << std::setw(26) << result.name << ' ' << result.checked
                << " checks";
      if (!result.detail.empty()) std::cout << "  (" << result.detail << ")";
      std::cout << "\n";
    }
    std::cout << total << " checks in " << results.size() << " groups, "
              << (all_passed ? "all pass" : "FAILURES above") << "\n";
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qtype: matrix-block decompositions of permutation-symmetric quantum types"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* cmd_decompose = app.add_subcommand(
      "decompose", "Decompose one type into a direct sum of matrix algebras");
  cmd_decompose
      ->add_option("kind", dec.kind, "unordered | cycle | words | subgroup")
      ->required()
      ->check(CLI::IsMember({"unordered", "cycle", "words", "subgroup"}));
  cmd_decompose->add_option("--n", dec.n, "tuple length (unordered, cycle, subgroup)");
  cmd_decompose->add_option("--d", dec.d, "local dimension")->required();
  cmd_decompose->add_option("--max-n", dec.max_n, "box-count truncation (words)");
  cmd_decompose->add_option("--generators", dec.generators,
                            "subgroup generators, cycle or one-line notation; "
                            "repeat the flag or separate with ';'");
  cmd_decompose->add_option("--format", dec.format, "text | json | csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_decompose->add_option("--seed", dec.seed, "oracle seed (subgroup)")
      ->capture_default_str();
  auto* dec_cap =
      cmd_decompose->add_option("--cap", dec.cap, "ambient cap on d^n (subgroup)")
          ->capture_default_str();
  cmd_decompose->add_option("--tol", dec.tol, "oracle clustering tolerance")
      ->capture_default_str();
  cmd_decompose->add_flag("--ascii", dec.ascii, "write (+) instead of the sum sign");

  TablesArgs tab;
  auto* cmd_tables = app.add_subcommand(
      "tables", "Print the unordered pairs/triples/quads decompositions per d");
  cmd_tables->add_option("which", tab.which, "pairs | triples | quads")
      ->required()
      ->check(CLI::IsMember({"pairs", "triples", "quads"}));
  cmd_tables->add_option("--d-max", tab.d_max, "largest local dimension row")
      ->capture_default_str();
  cmd_tables->add_option("--format", tab.format, "text | json | csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_tables->add_flag("--ascii", tab.ascii, "ascii output");

  VerifyArgs ver;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run the formula/oracle/identity cross-check suites");
  cmd_verify->add_option("--suite", ver.suite, "tables | oracle | cycles | identities | all")
      ->capture_default_str()
      ->check(CLI::IsMember({"tables", "oracle", "cycles", "identities", "all"}));
  cmd_verify->add_option("--n-max", ver.n_max, "override the per-check n bound");
  cmd_verify->add_option("--d-max", ver.d_max, "override the per-check d bound");
  cmd_verify->add_option("--seed", ver.seed, "oracle seed")->capture_default_str();
  auto* ver_cap = cmd_verify->add_option("--cap", ver.cap, "ambient cap on d^n")
                      ->capture_default_str();
  cmd_verify->add_option("--format", ver.format, "text | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_decompose->parsed()) {
      dec.cap = resolve_cap(dec_cap, dec.cap);
      return run_decompose(dec);
    }
    if (cmd_tables->parsed()) return run_tables(tab);
    ver.cap = resolve_cap(ver_cap, ver.cap);
    return run_verify(ver);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  } catch (const qtype::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputational;
  } catch (const qtype::DegenerateSpectrumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputational;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitComputational;
  }
}
