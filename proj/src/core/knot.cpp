#include "core/knot.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace c2b {

Slope make_slope(long p, long q) {
    if (p == 0 && q == 0)
        throw DomainError("slope 0/0");
    long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0)
        p = 1; // every p/0 is the meridian
    return Slope{p, q};
}

Slope parse_slope(const std::string& text) {
    static const std::regex re(R"(^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw ParseError("bad slope '" + text + "'");
    try {
        long p = std::stol(m[1].str());
        long q = m[2].matched ? std::stol(m[2].str()) : 1;
        return make_slope(p, q);
    } catch (const std::out_of_range&) {
        throw ParseError("slope out of range '" + text + "'");
    }
}

std::string to_string(const Slope& s) {
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

TwoBridgeKnot::TwoBridgeKnot(long alpha, long beta) : alpha_(alpha) {
    if (alpha < 3 || alpha % 2 == 0)
        throw DomainError("alpha must be odd and >= 3");
    beta_ = beta % alpha;
    if (beta_ < 0)
        beta_ += alpha;
    if (beta_ == 0 || std::gcd(alpha, beta_) != 1)
        throw DomainError("alpha and beta must be coprime");
}

TwoBridgeKnot TwoBridgeKnot::mirror() const {
    return TwoBridgeKnot(alpha_, alpha_ - beta_);
}

long TwoBridgeKnot::beta_inverse() const {
    long t0 = 0, t1 = 1, r0 = alpha_, r1 = beta_;
    while (r1 != 0) {
        long q = r0 / r1;
        std::tie(r0, r1) = std::tuple(r1, r0 - q * r1);
        std::tie(t0, t1) = std::tuple(t1, t0 - q * t1);
    }
    return ((t0 % alpha_) + alpha_) % alpha_;
}

bool TwoBridgeKnot::equivalent(const TwoBridgeKnot& o) const {
    if (alpha_ != o.alpha_)
        return false;
    return o.beta_ == beta_ || o.beta_ == beta_inverse();
}

KnotClass TwoBridgeKnot::classify() const {
    return (beta_ == 1 || beta_ == alpha_ - 1) ? KnotClass::Torus
                                               : KnotClass::Hyperbolic;
}

long TwoBridgeKnot::torus_strands() const {
    if (classify() != KnotClass::Torus)
        throw DomainError("not a torus knot");
    return beta_ == 1 ? alpha_ : -alpha_;
}

std::string TwoBridgeKnot::name() const {
    return "K(" + std::to_string(alpha_) + "," + std::to_string(beta_) + ")";
}

DoubleTwist make_double_twist(long l, long m) {
    if (std::abs(l) < 2 || std::abs(m) < 2)
        throw DomainError("double twist parameters need |l|,|m| >= 2");
    if (l % 2 != 0 && m % 2 != 0)
        throw DomainError("J(l,m) is a knot only when l or m is even");
    return DoubleTwist{l, m};
}

DoubleTwistNormal normalize_double_twist(const DoubleTwist& j) {
    long l = j.l, m = j.m;
    make_double_twist(l, m); // validate
    if (l > 0 && m > 0) {
        if (l < m) std::swap(l, m); // J(l,m) = J(m,l)
        return DoubleTwistNormal{l, m, false, false};
    }
    if (l < 0 && m < 0) {
        l = -l;
        m = -m;
        if (l < m) std::swap(l, m);
        return DoubleTwistNormal{l, m, false, true};
    }
    // Mixed signs: J(l,m) with m < 0 is the case-one form J(l, -(-m)).
    if (m > 0)
        std::swap(l, m);
    return DoubleTwistNormal{l, -m, true, false};
}

TwoBridgeKnot double_twist_knot(const DoubleTwistNormal& n) {
    long alpha = n.case_one ? n.l * n.m + 1 : n.l * n.m - 1;
    return TwoBridgeKnot(alpha, n.m);
}

TwoBridgeKnot from_double_twist(const DoubleTwist& j, bool* mirrored) {
    DoubleTwistNormal n = normalize_double_twist(j);
    TwoBridgeKnot k = double_twist_knot(n);
    if (mirrored)
        *mirrored = n.mirrored;
    return n.mirrored ? k.mirror() : k;
}

std::vector<DoubleTwistNormal> double_twist_presentations(const TwoBridgeKnot& k) {
    long alpha = k.alpha();
    long candidates[4] = {k.beta(), k.beta_inverse(), alpha - k.beta(),
                          alpha - k.beta_inverse()};
    std::vector<DoubleTwistNormal> out;
    auto add = [&](long l, long m, bool case_one, bool mirrored) {
        if (l < 2 || (l % 2 != 0 && m % 2 != 0))
            return;
        DoubleTwistNormal n{l, m, case_one, mirrored};
        for (const auto& o : out)
            if (o.l == n.l && o.m == n.m && o.case_one == n.case_one &&
                o.mirrored == n.mirrored)
                return;
        out.push_back(n);
    };
    for (int i = 0; i < 4; i++) {
        long m = candidates[i];
        bool mirrored = i >= 2; // the mirror's beta values
        if (m < 2)
            continue;
        if ((alpha - 1) % m == 0)
            add((alpha - 1) / m, m, true, mirrored);
        if ((alpha + 1) % m == 0)
            add((alpha + 1) / m, m, false, mirrored);
    }
    return out;
}

TwoBridgeKnot parse_knot(const std::string& text, bool* mirrored) {
    static const std::regex re(
        R"(^\s*([KJ])\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw ParseError("bad knot '" + text + "'");
    long a, b;
    try {
        a = std::stol(m[2].str());
        b = std::stol(m[3].str());
    } catch (const std::out_of_range&) {
        throw ParseError("knot parameters out of range in '" + text + "'");
    }
    if (m[1].str() == "K") {
        if (mirrored)
            *mirrored = false;
        return TwoBridgeKnot(a, b);
    }
    return from_double_twist(make_double_twist(a, b), mirrored);
}

} // namespace c2b
