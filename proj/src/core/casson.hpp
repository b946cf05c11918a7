#pragma once

#include <optional>
#include <set>
#include <vector>

#include "core/knot.hpp"
#include "core/rational.hpp"
#include "core/seminorm.hpp"

namespace c2b {

enum class Strictness { No, Yes, Unknown };

struct Admissibility {
    bool regular = true;           // automatic for two-bridge knots
    bool is_boundary_slope = false;
    Strictness strict = Strictness::No;
    bool alexander_ok = false;
    bool admissible = false;       // alexander_ok && strict == No
};

// Correction terms (E0, E1) subtracted according to the parity of p.
std::pair<Rational, Rational> correction_terms(const TwoBridgeKnot& k);

Admissibility admissibility(const TwoBridgeKnot& k, const Slope& s);

struct CassonResult {
    Rational value;         // lambda of the p/q surgery
    Rational seminorm_value; // ||p/q||
    Rational correction;    // E_{sigma(p)}
    int parity;             // sigma(p): |p| mod 2
    Admissibility diagnostics;
};

// lambda(p/q) = 1/2 ||p/q|| - E_{sigma(p)}. Computes unconditionally;
// diagnostics report whether the value is certified.
CassonResult casson_invariant(const TwoBridgeKnot& k, const Slope& s);

// Same value through the closed double twist formulas; must agree with
// casson_invariant on the underlying knot.
CassonResult casson_double_twist(const DoubleTwist& j, const Slope& s);

// 2*||p/q|| for the normal form, by the case formulas (p,q raw integers).
Int double_twist_norm2(const DoubleTwistNormal& n, long p, long q);

// Integer surgery slopes excluded from the nontriviality statement.
// Empty for torus knots and for knots with no double twist presentation.
std::set<long> exceptional_slopes(const TwoBridgeKnot& k);

enum class Nontriviality { Positive, Meridian, Excluded };

// Status of lambda(p/q) > 0 for a hyperbolic two-bridge knot; the positivity
// of the computed value is asserted whenever the slope is admissible.
Nontriviality nontriviality(const TwoBridgeKnot& k, const Slope& s);

// lambda'(K) = 1/2 ||0/1||; always a positive integer or half-integer.
Rational lambda_prime(const TwoBridgeKnot& k);

} // namespace c2b
