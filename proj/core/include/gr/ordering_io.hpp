#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gr/ordering.hpp"

namespace gr {

/// CSV "rank,x,y" (lattice families) or "rank,vertex" (trees), ranks 1..n.
void write_ordering(std::ostream& out, const Ordering& o);

/// Reads the format above; rows may come in any order but ranks must be
/// exactly 1..n.
Ordering read_ordering(std::istream& in, const Graph& g, std::string name = "file");

/// Splits a CSV/whitespace separated line into fields.
std::vector<std::string> split_fields(const std::string& line);

}  // namespace gr
