#pragma once

#include <string>

#include "qtype/decomp.hpp"

namespace qtype::json_io {

/// Fixed wire format:
///   {"kind": "...", "n": int?, "d": int, "truncated_at": int?,
///    "boundedoperators_summand": bool,
///    "blocks": [{"dim": int, "label": [int,...] | {"k": int}}]}
/// Diagram labels are emitted with zero rows trimmed and re-padded to the
/// ambient d on parse, so parse(emit(x)) == x.
std::string emit(const decomp::AlgebraDecomposition& decomposition, int indent = 2);

decomp::AlgebraDecomposition parse(const std::string& text);

}  // namespace qtype::json_io
