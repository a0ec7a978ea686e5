#pragma once

#include <string>

#include "tb/diagram.hpp"
#include "tb/element.hpp"

namespace tb {

enum class RenderStyle { Plain, Labelled };

// Unit circle with each arc drawn as the circular arc orthogonal to it.
std::string render_svg(const ArcDiagram& d, RenderStyle style = RenderStyle::Plain);
// Domain and range side by side; the dot marks domain leaf 0 and its partner.
std::string render_svg(const Element& f, RenderStyle style = RenderStyle::Plain);

}  // namespace tb
