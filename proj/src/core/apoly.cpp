#include "core/apoly.hpp"

#include <numeric>

#include "core/seminorm.hpp"

namespace c2b {

AhatDegrees ahat_degrees(const TwoBridgeKnot& k) {
    Seminorm norm(k);
    Rational degL = norm.eval_raw(1, 0);
    Rational degM = norm.eval_raw(0, 1);
    if (degL.get_den() != 1 || degM.get_den() != 1)
        throw InternalError("A-hat degrees must be integers");
    AhatDegrees d{degM.get_num().get_si(), degL.get_num().get_si()};
    if (d.deg_L != (k.alpha() - 1) / 2)
        throw InternalError("deg_L must equal (alpha-1)/2");
    return d;
}

long double_twist_degM(const DoubleTwist& j) {
    // deg_M = ||0/1||; mirroring negates slopes, so deg_M is unaffected.
    DoubleTwistNormal n = normalize_double_twist(j);
    long l = n.l, m = n.m; // l >= m >= 2 in the same-sign case
    if (n.case_one) {
        if (l % 2 == 0 && m % 2 == 0)
            return 2 * l * m;
        return (l % 2 == 1) ? m * (l * m + 1) : l * (l * m + 1);
    }
    if (l % 2 == 0 && m % 2 == 0)
        return 2 * l * m - 2;
    return (l % 2 == 1) ? m * m * (l - 1) - (m - 1) * (m - 2)
                        : m * (l - 1) * (l - 1) - (l - m) + 2 * (m - 1);
}

AhatDegrees torus_ahat_degrees(long p, long q) {
    if (p < 2 || q < 2)
        throw DomainError("torus parameters must be >= 2");
    if (std::gcd(p, q) != 1)
        throw DomainError("torus parameters must be coprime");
    long degL = (p - 1) * (q - 1) / 2;
    long degM = p * q * (p - 1) * (q - 1) / 2;
    return AhatDegrees{degM, degL};
}

DegreeReport degree_consistency(const TwoBridgeKnot& k, const AhatDegrees& expected) {
    DegreeReport r;
    r.computed = ahat_degrees(k);
    r.expected = expected;
    r.degM_ok = r.computed.deg_M == expected.deg_M;
    r.degL_ok = r.computed.deg_L == expected.deg_L;
    return r;
}

} // namespace c2b
