#include "qtype/json_io.hpp"

#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace qtype::json_io {

namespace {

using nlohmann::ordered_json;

ordered_json dim_to_json(const BigInt& dim) {
  if (dim <= std::numeric_limits<std::int64_t>::max())
    return dim.convert_to<std::int64_t>();
  return dim.str();  // beyond int64 a decimal string keeps the value exact
}

BigInt dim_from_json(const nlohmann::json& value) {
  if (value.is_string()) return BigInt(value.get<std::string>());
  return BigInt(value.get<std::int64_t>());
}

}  // namespace

std::string emit(const decomp::AlgebraDecomposition& decomposition, int indent) {
  ordered_json root;
  root["kind"] = decomp::to_string(decomposition.kind);
  if (decomposition.n) root["n"] = *decomposition.n;
  root["d"] = decomposition.d;
  if (decomposition.truncated_at) root["truncated_at"] = *decomposition.truncated_at;
  root["boundedoperators_summand"] = decomposition.has_boundedoperators_summand;
  root["blocks"] = ordered_json::array();
  for (const auto& block : decomposition.blocks) {
    ordered_json entry;
    entry["dim"] = dim_to_json(block.dimension);
    if (const auto* diagram = std::get_if<young::YoungDiagram>(&block.label)) {
      entry["label"] = diagram->trimmed();
    } else {
      entry["label"] = ordered_json{{"k", std::get<decomp::IndexLabel>(block.label).value}};
    }
    root["blocks"].push_back(std::move(entry));
  }
  return root.dump(indent) + "\n";
}

decomp::AlgebraDecomposition parse(const std::string& text) {
  const auto root = nlohmann::json::parse(text);
  decomp::AlgebraDecomposition out;
  out.kind = decomp::kind_from_string(root.at("kind").get<std::string>());
  if (root.contains("n")) out.n = root.at("n").get<int>();
  out.d = root.at("d").get<int>();
  if (root.contains("truncated_at")) out.truncated_at = root.at("truncated_at").get<int>();
  out.has_boundedoperators_summand = root.at("boundedoperators_summand").get<bool>();
  for (const auto& entry : root.at("blocks")) {
    decomp::Block block;
    block.dimension = dim_from_json(entry.at("dim"));
    const auto& label = entry.at("label");
    if (label.is_array()) {
      young::YoungDiagram diagram{label.get<std::vector<int>>()};
      block.label = diagram.padded(out.d);
    } else {
      block.label = decomp::IndexLabel{label.at("k").get<int>()};
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace qtype::json_io
