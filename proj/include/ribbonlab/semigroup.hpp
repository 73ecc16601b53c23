#pragma once

#include "ribbonlab/core.hpp"

namespace ribbon {

// a#b: a's maximal node is glued to b's minimal node. Both glued nodes must
// be positive; `strict` additionally requires a's minimum and b's maximum to
// be positive.
Ribbon connected_sum(const Ribbon& a, const Ribbon& b, bool strict = true);
bool sum_admissible(const Ribbon& a, const Ribbon& b, bool strict = true);

struct MarkedRibbon {
  RigidRibbon ribbon;
  int origin = 0;  // positive min-type node
  int end = 1;     // positive max-type node
};

void validate_marked(const MarkedRibbon& m);
Ribbon discrete(const MarkedRibbon& m);
// Marked ribbon with integer levels taken from a discrete ribbon.
MarkedRibbon mark_ends(const Ribbon& a, int origin, int end);

MarkedRibbon compose(const MarkedRibbon& a, const MarkedRibbon& b);
MarkedRibbon ternary_compose(const MarkedRibbon& a, const MarkedRibbon& b,
                             const MarkedRibbon& c);
MarkedRibbon marked_invert(const MarkedRibbon& a);

}  // namespace ribbon
