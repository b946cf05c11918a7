#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace c2b {

// Surgery slope p/q in lowest terms with q >= 0; the meridian is 1/0.
struct Slope {
    long p = 1;
    long q = 0;
    bool operator==(const Slope&) const = default;
};

Slope make_slope(long p, long q);
Slope parse_slope(const std::string& text);
std::string to_string(const Slope& s);

enum class KnotClass { Torus, Hyperbolic };

// Two-bridge knot K(alpha,beta): alpha odd >= 3, 0 < beta < alpha, coprime.
class TwoBridgeKnot {
public:
    TwoBridgeKnot(long alpha, long beta);

    long alpha() const { return alpha_; }
    long beta() const { return beta_; }

    TwoBridgeKnot mirror() const;          // K(alpha, alpha - beta)
    bool equivalent(const TwoBridgeKnot& o) const; // same knot type
    long beta_inverse() const;             // beta^{-1} mod alpha
    KnotClass classify() const;            // torus iff beta in {1, alpha-1}
    // For a torus knot, the (2, n) parameters with n odd (n < 0 allowed).
    long torus_strands() const;

    std::string name() const;

private:
    long alpha_;
    long beta_;
};

// Double twist knot J(l,m): |l|,|m| >= 2 and at least one even.
struct DoubleTwist {
    long l;
    long m;
};

DoubleTwist make_double_twist(long l, long m);

// Normal form used by the closed formulas: l,m >= 2, exactly the two cases
//   case_one:  J(l,-m) = K(lm+1, m)
//   !case_one: J(l, m) = K(lm-1, m)
// mirrored records that the input was the mirror of the normal form.
struct DoubleTwistNormal {
    long l;
    long m;
    bool case_one;
    bool mirrored;
};

DoubleTwistNormal normalize_double_twist(const DoubleTwist& j);
TwoBridgeKnot double_twist_knot(const DoubleTwistNormal& n);

// Two-bridge form of J(l,m); *mirrored reports whether K(alpha,beta) is the
// mirror of the named diagram (K always has 0 < beta < alpha).
TwoBridgeKnot from_double_twist(const DoubleTwist& j, bool* mirrored = nullptr);

// All double twist presentations of K as a normal form; empty if none.
// mirrored means K is the mirror of the presented normal form.
std::vector<DoubleTwistNormal> double_twist_presentations(const TwoBridgeKnot& k);

// Parse "K(alpha,beta)" or "J(l,m)" (whitespace tolerated).
TwoBridgeKnot parse_knot(const std::string& text, bool* mirrored = nullptr);

} // namespace c2b
