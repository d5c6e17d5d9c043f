#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Largest order expressible with the one-byte size prefix.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 record (no trailing newline). Only the one-byte size
/// form is accepted; padding bits must be zero. Throws ParseError.
Graph parse_graph6(std::string_view line);

/// Encodes g (order <= 62) as graph6.
std::string emit_graph6(const Graph& g);

/// Reads one graph per nonempty line; a leading ">>graph6<<" header is skipped.
/// Throws ParseError naming the offending line.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace longcycle
