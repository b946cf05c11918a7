#include "core/casson.hpp"

#include <algorithm>

#include "core/alexander.hpp"
#include "core/surfaces.hpp"

namespace c2b {

std::pair<Rational, Rational> correction_terms(const TwoBridgeKnot& k) {
    return {Rational(0), make_rational(k.alpha() - 1, 4)};
}

Admissibility admissibility(const TwoBridgeKnot& k, const Slope& s) {
    Admissibility out;
    auto surfs = all_surfaces(k);
    bool on_boundary = false, nonseifert_carrier = false;
    if (s.q == 1) {
        for (const auto& d : surfs)
            if (d.slope == s.p) {
                on_boundary = true;
                if (!d.is_seifert)
                    nonseifert_carrier = true;
            }
    }
    out.is_boundary_slope = on_boundary;
    if (!on_boundary)
        out.strict = Strictness::No;
    else if (nonseifert_carrier || !is_fibered(k))
        out.strict = Strictness::Yes;
    else
        out.strict = Strictness::No;
    out.alexander_ok = admissible_alexander(k, s);
    out.admissible = out.alexander_ok && out.strict == Strictness::No;
    return out;
}

CassonResult casson_invariant(const TwoBridgeKnot& k, const Slope& s) {
    Seminorm norm(k);
    CassonResult r;
    r.seminorm_value = norm.eval(s);
    r.parity = static_cast<int>(std::abs(s.p) % 2);
    auto [e0, e1] = correction_terms(k);
    r.correction = r.parity ? e1 : e0;
    r.value = r.seminorm_value / 2 - r.correction;
    r.diagnostics = admissibility(k, s);
    return r;
}

Int double_twist_norm2(const DoubleTwistNormal& n, long p, long q) {
    const Int P = p, Q = q;
    const long l = n.l, m = n.m;
    auto A = [](const Int& x) { return abs(x); };
    if (n.case_one) {
        if (l % 2 == 0 && m % 2 == 0)
            return Int(l * m - l - m) * A(P) + Int(l) * A(P - 2 * m * Q) +
                   Int(m) * A(P + 2 * l * Q);
        if (l % 2 == 1)
            return Int((l - 1) * (m - 1)) * A(P + 2 * m * Q) + Int(l - 1) * A(P) +
                   Int(m) * A(P + 2 * (l + m) * Q);
        return Int((l - 1) * (m - 1)) * A(P - 2 * l * Q) +
               Int(l) * A(P - 2 * (l + m) * Q) + Int(m - 1) * A(P);
    }
    if (l % 2 == 0 && m % 2 == 0)
        return Int(l * m - l - m) * A(P) + Int(l - 2) * A(P + 2 * m * Q) +
               Int(m - 2) * A(P + 2 * l * Q) + Int(2) * A(P + 2 * (l + m - 1) * Q);
    if (l % 2 == 1)
        return Int((l - 1) * (m - 1)) * A(P - 2 * m * Q) + Int(l - 3) * A(P) +
               Int(m - 2) * A(P + 2 * (l - m) * Q) + Int(2) * A(P + 2 * (l - 1) * Q);
    return Int((l - 1) * (m - 1)) * A(P - 2 * l * Q) +
           Int(l - 2) * A(P + 2 * (m - l) * Q) + Int(m - 3) * A(P) +
           Int(2) * A(P + 2 * (m - 1) * Q);
}

CassonResult casson_double_twist(const DoubleTwist& j, const Slope& s) {
    DoubleTwistNormal n = normalize_double_twist(j);
    long p = n.mirrored ? -s.p : s.p; // boundary slopes negate under mirroring
    Int norm2 = double_twist_norm2(n, p, s.q);
    TwoBridgeKnot k = from_double_twist(j);

    CassonResult r;
    r.seminorm_value = make_rational(norm2, Int(2));
    r.parity = static_cast<int>(std::abs(s.p) % 2);
    auto [e0, e1] = correction_terms(k);
    r.correction = r.parity ? e1 : e0;
    r.value = r.seminorm_value / 2 - r.correction;
    r.diagnostics = admissibility(k, s);
    return r;
}

std::set<long> exceptional_slopes(const TwoBridgeKnot& k) {
    if (k.classify() == KnotClass::Torus)
        return {};
    auto pres = double_twist_presentations(k);
    if (pres.empty())
        return {};
    long a = k.alpha();
    if (a == 5)
        return {4, -4}; // the figure-eight knot

    bool twist = std::any_of(pres.begin(), pres.end(), [](const DoubleTwistNormal& n) {
        return std::min(n.l, n.m) == 2;
    });
    if (twist) {
        // Normalize to the even-parameter twist form; its slope is +-4.
        long half = (a - 1) / 2;
        std::set<long> e = (half % 2 == 0) ? std::set<long>{4} : std::set<long>{-4};
        // The even form carries beta' = 2; if neither beta nor beta^{-1} is 2
        // the knot at hand is its mirror.
        bool mirrored = !(k.beta() == 2 || k.beta_inverse() == 2);
        if (!mirrored)
            return e;
        std::set<long> neg;
        for (long x : e)
            neg.insert(-x);
        return neg;
    }

    const DoubleTwistNormal& n = pres.front();
    long slope;
    if (n.l % 2 == 0 && n.m % 2 == 0)
        slope = 0;
    else if (n.case_one)
        slope = (n.l % 2 == 1) ? -2 * n.m : 2 * n.l;
    else
        slope = (n.l % 2 == 1) ? 2 * n.m : 2 * n.l;
    if (n.mirrored)
        slope = -slope;
    return {slope};
}

Nontriviality nontriviality(const TwoBridgeKnot& k, const Slope& s) {
    if (k.classify() != KnotClass::Hyperbolic)
        throw DomainError("nontriviality statement applies to hyperbolic knots");
    if (s.q == 0)
        return Nontriviality::Meridian;
    if (s.q == 1) {
        auto exc = exceptional_slopes(k);
        if (exc.count(s.p))
            return Nontriviality::Excluded;
    }
    CassonResult r = casson_invariant(k, s);
    if (r.diagnostics.admissible && r.value <= 0)
        throw InternalError("admissible non-exceptional surgery with lambda <= 0");
    return Nontriviality::Positive;
}

Rational lambda_prime(const TwoBridgeKnot& k) {
    return Seminorm(k).eval_raw(0, 1) / 2;
}

} // namespace c2b
