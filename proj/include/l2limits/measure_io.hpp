#pragma once

#include "l2limits/measures.hpp"

#include <iosfwd>
#include <string>

namespace l2limits {

// Measure files are JSON documents
//   {"support": [{"weight": "1/3", "maximal_simplices": [[0, 1], ...], "root": 0}, ...]}
// with weights as exact rational strings. Parse failures raise
// MalformedInput; invalid weights raise ValidationError.

RandomRootedComplex read_measure(std::istream& in);
RandomRootedComplex read_measure_file(const std::string& path);

/// Writes the canonical representatives (root 0) in support order.
void write_measure(std::ostream& out, const RandomRootedComplex& m);

}  // namespace l2limits
