#pragma once

#include <string>

#include "monobrick/diagram.hpp"

namespace monobrick::io {

/// Arcs as brackets stacked above a numbered baseline. Overlapping arcs go on
/// separate levels, shorter ones lower. Cyclic algebras show the marks twice
/// (plus one) and draw every arc from its start in the first copy.
[[nodiscard]] std::string render_ascii(const ArcDiagram& d);

}  // namespace monobrick::io
