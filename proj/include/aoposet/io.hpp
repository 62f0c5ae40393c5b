#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "aoposet/graph.hpp"
#include "aoposet/poset.hpp"

namespace aoposet::io {

/// Poset text format:
///
///   # comment
///   poset 3
///   2 > 0
///   2 > 1
///
/// Each body line "u > v" states v < u. Any order pairs are accepted, not only
/// covers; duplicates and line order do not matter. Throws ParseError on
/// malformed input and CycleError when the pairs are not a strict order.
Poset read_poset(std::istream& in);

/// Graph text format: header "graph n", body lines "u -- v". Duplicate edges
/// are ignored; a self-loop is a ParseError.
SimpleGraph read_graph(std::istream& in);

/// Dispatches on the header keyword.
std::variant<Poset, SimpleGraph> read_any(std::istream& in);
std::variant<Poset, SimpleGraph> read_file(const std::filesystem::path& path);

/// Writes covers only, sorted by (upper, lower).
void write_poset(std::ostream& out, const Poset& p);
void write_graph(std::ostream& out, const SimpleGraph& g);

/// Hasse diagram in DOT. Elements sharing a level are put in one rank and
/// every edge points from the lower element to the upper one.
void write_dot(std::ostream& out, const Poset& p, const std::string& name = "poset");

}  // namespace aoposet::io
