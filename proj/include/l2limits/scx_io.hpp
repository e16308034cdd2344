#pragma once

#include "l2limits/complex.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace l2limits {

// `.scx` text format: one simplex per line as whitespace-separated vertex
// ids, `#` starts a comment line, and an optional `root <id>` line.

struct ScxDocument {
  SimplicialComplex complex;
  std::optional<Vertex> root;
};

/// Throws MalformedInput with a line number on bad input.
ScxDocument read_scx(std::istream& in);
ScxDocument read_scx_file(const std::string& path);

/// Writes the root line (if any) then the maximal simplices in
/// lexicographic order. read -> write is a fixed point after one pass.
void write_scx(std::ostream& out, const SimplicialComplex& k, std::optional<Vertex> root = std::nullopt);
std::string to_scx(const SimplicialComplex& k, std::optional<Vertex> root = std::nullopt);

}  // namespace l2limits
