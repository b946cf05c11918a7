#pragma once

#include "core/intpoly.hpp"
#include "core/knot.hpp"

namespace c2b {

// Alexander polynomial via Fox calculus on the standard two-bridge
// presentation <x,y | xw = wy>, normalized to an honest polynomial with
// nonzero constant term and positive leading coefficient.
IntPoly alexander(const TwoBridgeKnot& k);

// Monic Alexander polynomial; for alternating knots this decides fiberedness.
bool is_fibered(const TwoBridgeKnot& k);

// No root of the Alexander polynomial is a relevant root of unity for the
// surgery: order |p| when p is odd, |p|/2 when even; p = 0 checks every order
// up to 2*deg + 2, and |p| = 1 always passes.
bool admissible_alexander(const TwoBridgeKnot& k, const Slope& s);

} // namespace c2b
