#include "qtype/render.hpp"

#include <sstream>

namespace qtype::render {

namespace {

const char* direct_sum(bool ascii) { return ascii ? " (+) " : " ⊕ "; }
const char* bounded_summand(bool ascii) { return ascii ? "B(l2)" : "B(ℓ²)"; }

}  // namespace

std::string label_string(const decomp::Block& block, decomp::Kind kind) {
  if (const auto* diagram = std::get_if<young::YoungDiagram>(&block.label))
    return young::to_display_string(*diagram);
  const int value = std::get<decomp::IndexLabel>(block.label).value;
  std::ostringstream os;
  os << (kind == decomp::Kind::cycle ? "k=" : "comp=") << value;
  return os.str();
}

std::string block_sum_line(const decomp::AlgebraDecomposition& decomposition,
                           bool ascii) {
  std::ostringstream os;
  bool first = true;
  if (decomposition.has_boundedoperators_summand) {
    os << bounded_summand(ascii);
    first = false;
  }
  for (const auto& block : decomposition.blocks) {
    if (!first) os << direct_sum(ascii);
    os << "M_" << block.dimension;
    first = false;
  }
  return os.str();
}

std::string text(const decomp::AlgebraDecomposition& decomposition, bool ascii) {
  std::ostringstream os;
  os << block_sum_line(decomposition, ascii) << "\n";
  if (decomposition.truncated_at)
    os << "  truncated at " << *decomposition.truncated_at << " boxes\n";
  for (const auto& block : decomposition.blocks)
    os << "  M_" << block.dimension << "  "
       << label_string(block, decomposition.kind) << "\n";
  return os.str();
}

std::string csv(const decomp::AlgebraDecomposition& decomposition) {
  std::ostringstream os;
  os << "kind,n,d,label,dim\n";
  for (const auto& block : decomposition.blocks) {
    os << decomp::to_string(decomposition.kind) << ',';
    if (decomposition.n) os << *decomposition.n;
    os << ',' << decomposition.d << ",\"" << label_string(block, decomposition.kind)
       << "\"," << block.dimension << "\n";
  }
  return os.str();
}

}  // namespace qtype::render
