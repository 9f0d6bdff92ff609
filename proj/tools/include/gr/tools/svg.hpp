#pragma once

#include <string>

#include "gr/lattice_function.hpp"
#include "gr/ordering.hpp"

namespace gr::tools {

/// Heatmap of f over the window: one square per cell, gray level
/// proportional to f / max f. Grid and ladder windows only.
std::string render_function_svg(const LatticeFunction& f);

/// Rank labels at lattice positions for the first `ranks` vertices.
std::string render_ordering_svg(const Ordering& o, std::size_t ranks);

}  // namespace gr::tools
