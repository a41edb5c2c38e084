#pragma once

#include <string>

#include "qtype/decomp.hpp"

namespace qtype::render {

/// "(3,1)" for diagram labels, "k=1" for cycle blocks, "comp=0" for
/// subgroup blocks.
std::string label_string(const decomp::Block& block, decomp::Kind kind);

/// "M_4 (+) M_2 (+) M_2" in ascii, with a real direct-sum sign otherwise;
/// words decompositions get the symbolic B(l^2) summand up front.
std::string block_sum_line(const decomp::AlgebraDecomposition& decomposition,
                           bool ascii);

/// Sum line plus one annotation line per block.
std::string text(const decomp::AlgebraDecomposition& decomposition, bool ascii);

/// One row per block: kind,n,d,label,dim (header included, label quoted).
std::string csv(const decomp::AlgebraDecomposition& decomposition);

}  // namespace qtype::render
