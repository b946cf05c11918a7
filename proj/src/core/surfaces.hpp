#pragma once

#include <utility>
#include <vector>

#include "core/knot.hpp"
#include "core/rational.hpp"

namespace c2b {

// Continued fraction [n1,...,nk] for n1 + 1/(n2 + 1/(... + 1/nk)),
// taken as an expansion of a value r via 1/r = n1 + s, s = 1/(n2 + ...).
using ContinuedFraction = std::vector<long>;

// Value r with 1/r = n1 + 1/(n2 + 1/(...)); errors on division by zero.
Rational cf_value(const ContinuedFraction& cf);

// All expansions of r in (-1,1)\{0} with every |ni| >= 2.
std::vector<ContinuedFraction> enumerate_expansions(const Rational& r);

// (n+, n-) where n+ counts entries whose sign matches the alternating
// pattern +,-,+,-,...
std::pair<int, int> sign_pattern_counts(const ContinuedFraction& cf);

struct SurfaceDatum {
    ContinuedFraction expansion;
    long slope;          // boundary slope, normalized against the Seifert surface
    long doubled_weight; // twice the seminorm weight; always a nonneg integer
    bool is_seifert;
};

// The unique all-even expansion among those of beta/alpha and (beta-alpha)/alpha.
ContinuedFraction seifert_expansion(const TwoBridgeKnot& k);

// Every incompressible-surface expansion of the knot, sorted by
// (slope, expansion). Doubled weights sum to alpha - 1.
std::vector<SurfaceDatum> all_surfaces(const TwoBridgeKnot& k);

// Boundary slope of the expansion relative to the Seifert expansion.
long boundary_slope(const ContinuedFraction& cf, const ContinuedFraction& seifert);

} // namespace c2b
