#pragma once

#include "tb/circle.hpp"
#include "tb/element.hpp"

namespace tb {

// Decides whether a PL circle map belongs to the group and returns its reduced
// element.  Rejections throw one of SlopeNotPowerOfTwo (witness: start of the
// offending segment), BreakpointNotArcEndpoint (the coordinate),
// ArcNotPreserved (the domain arc) or ImageNotStandard (the domain leaf).
Element recognize(const PLCircleMap& f);

// Power-of-two slopes and breakpoints on the k/(3*2^n) grid.
bool t3_check(const PLCircleMap& f);

bool roundtrip(const Element& f);

}  // namespace tb
