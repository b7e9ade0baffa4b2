#pragma once

#include <string>

#include "cbperm/codeword.hpp"
#include "cbperm/lattice.hpp"

namespace cbperm {

enum class RenderFormat { Svg, Ascii };

struct RenderSpec {
  RenderFormat format = RenderFormat::Svg;
  int cell_size = 40;  // SVG pixels per lattice unit
};

/// Grid, the path with a mark on every vertex, the barrier y = x + barrier
/// drawn across the grid, and labels for the origin and the endpoint.
std::string render_path(const LatticePath& path, int barrier, const RenderSpec& spec);

/// Drops the marker segment (length i) and renders the tail's path with
/// barrier i. A word made only of markers has a path without East steps;
/// rendering it throws InvalidInput unless allow_empty_path is set.
std::string render_codeword(const CodeWord& word, const RenderSpec& spec,
                            bool allow_empty_path = false);

}  // namespace cbperm
