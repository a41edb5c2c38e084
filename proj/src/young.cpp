#include "qtype/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtype/errors.hpp"

namespace qtype::young {

int YoungDiagram::boxes() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int YoungDiagram::height() const {
  int h = 0;
  for (int p : parts)
    if (p > 0) ++h;
  return h;
}

bool YoungDiagram::weakly_decreasing() const {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] < parts[i]) return false;
  return parts.empty() || parts.back() >= 0;
}

YoungDiagram YoungDiagram::padded(int d) const {
  if (d < 1) throw std::invalid_argument("YoungDiagram::padded: d must be >= 1");
  std::vector<int> out = trimmed();
  if (static_cast<int>(out.size()) > d)
    throw std::invalid_argument("YoungDiagram::padded: diagram height exceeds d");
  out.resize(d, 0);
  return YoungDiagram{std::move(out)};
}

std::vector<int> YoungDiagram::trimmed() const {
  std::vector<int> out = parts;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string to_display_string(const YoungDiagram& diagram) {
  std::ostringstream os;
  os << '(';
  const auto rows = diagram.trimmed();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ',';
    os << rows[i];
  }
  os << ')';
  return os.str();
}

namespace {

void emit_partitions(int remaining, int slots, int max_part, std::vector<int>& acc,
                     std::vector<YoungDiagram>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(YoungDiagram{acc});
    return;
  }
  const int lo = (remaining + slots - 1) / slots;  // smallest feasible leading part
  for (int p = std::min(max_part, remaining); p >= lo; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, slots - 1, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

DiagramFamily enumerate_diagrams(int n, int d) {
  if (n < 0) throw std::invalid_argument("enumerate_diagrams: n must be >= 0");
  if (d < 1) throw std::invalid_argument("enumerate_diagrams: d must be >= 1");
  DiagramFamily family{n, d, {}};
  std::vector<int> acc;
  acc.reserve(d);
  emit_partitions(n, d, n, acc, family.diagrams);
  return family;
}

BigInt schur_weyl_multiplicity(const YoungDiagram& diagram, int d) {
  const auto lambda = diagram.padded(d).parts;
  BigInt num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= lambda[i] - lambda[j] + (j - i);
      den *= j - i;
    }
  }
  return exact_div(num, den, "Weyl dimension product");
}

BigInt hook_dimension(const YoungDiagram& diagram) {
  const auto rows = diagram.trimmed();
  if (rows.empty())
    throw std::invalid_argument("hook_dimension: diagram has no boxes");
  const int n = std::accumulate(rows.begin(), rows.end(), 0);
  // column height above and including each box
  const int width = rows[0];
  std::vector<int> col_height(width, 0);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int c = 0; c < rows[r]; ++c) ++col_height[c];
  BigInt hooks = 1;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      const int arm = rows[r] - 1 - c;
      const int leg = col_height[c] - 1 - r;
      hooks *= arm + leg + 1;
    }
  }
  return exact_div(factorial(n), hooks, "hook length formula");
}

std::vector<YoungDiagram> enumerate_ystar(int d, int max_n) {
  if (d < 1) throw std::invalid_argument("enumerate_ystar: d must be >= 1");
  if (max_n < 2) throw std::invalid_argument("enumerate_ystar: max_n must be >= 2");
  std::vector<YoungDiagram> out;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& diagram : enumerate_diagrams(n, d).diagrams) {
      if (diagram.parts.size() > 1 && diagram.parts[1] > 0) out.push_back(diagram);
    }
  }
  return out;
}

}  // namespace qtype::young
