#pragma once

// Deterministic pictures of tangles.  ASCII: nodes 'o', circles '*',
// squares '#'.  SVG: 40px node pitch, cups and caps as half-arcs.

#include "tlcb/tangle.hpp"

#include <string>

namespace tlcb {

std::string render_ascii(const Tangle& t);
std::string render_svg(const Tangle& t);

}  // namespace tlcb
