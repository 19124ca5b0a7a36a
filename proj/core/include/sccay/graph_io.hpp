#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sccay/dense_graph.hpp"

namespace sccay {

/// graph6 encoding: N(n) then the upper triangle x(0,1) x(0,2) x(1,2)
/// x(0,3) ... in column order, six bits per byte offset by 63. No header
/// and no trailing newline.
std::string to_graph6(const DenseGraph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
DenseGraph from_graph6(std::string_view text);

/// "n <count>" line followed by one "u v" line per edge (u < v, ascending).
std::string to_edge_list(const DenseGraph& g);
/// Reads "u v" lines. An optional leading "n <count>" line fixes the vertex
/// count; otherwise it is one more than the largest label. '#' starts a comment.
DenseGraph from_edge_list(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace sccay
