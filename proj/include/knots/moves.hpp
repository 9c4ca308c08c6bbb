#pragma once

#include "knots/diagram.hpp"

namespace knots {

// Reidemeister-move surgeries.  Insertions keep the diagram planar and the
// underlying link type fixed; they throw std::invalid_argument when the
// requested configuration cannot be embedded (e.g. poking non-co-facial
// arcs).

// Add a kink on `arc`.  `over_first`: the strand passes over itself before
// under (or the reverse); `sign` is the new crossing's sign.
Diagram r1_insert(const Diagram& d, int arc, bool over_first, int sign);

// Poke arc `over` across arc `under` (two new crossings of opposite sign);
// `side` picks which of the two faces at the arcs the poke crosses, and
// `antiparallel` selects the pattern where the strands run through the
// bigon in opposite directions.
Diagram r2_insert(const Diagram& d, int over, int under, int side,
                  bool antiparallel = false);

// Greedy removal of kinks and poke bigons until none remain.
Diagram reduce_r1_r2(const Diagram& d);

}  // namespace knots
