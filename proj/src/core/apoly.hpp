#pragma once

#include "core/knot.hpp"
#include "core/rational.hpp"

namespace c2b {

struct AhatDegrees {
    long deg_M;
    long deg_L;
};

// Newton polygon degrees of the hatted A-polynomial:
//   deg_L = ||1/0|| = (alpha-1)/2,  deg_M = ||0/1||.
AhatDegrees ahat_degrees(const TwoBridgeKnot& k);

// deg_M of the double twist knot by the closed corollary formulas.
long double_twist_degM(const DoubleTwist& j);

// Degrees for the (p,q) torus knot, p,q >= 2 coprime:
//   deg_L = (p-1)(q-1)/2,  deg_M = pq(p-1)(q-1)/2.
AhatDegrees torus_ahat_degrees(long p, long q);

struct DegreeReport {
    AhatDegrees computed;
    AhatDegrees expected;
    bool degM_ok;
    bool degL_ok;
};

DegreeReport degree_consistency(const TwoBridgeKnot& k, const AhatDegrees& expected);

} // namespace c2b
