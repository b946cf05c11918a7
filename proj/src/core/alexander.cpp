#include "core/alexander.hpp"

#include <map>

namespace c2b {

IntPoly alexander(const TwoBridgeKnot& k) {
    long a = k.alpha();
    // Fox d/dx abelianizes cleanly only for an odd beta representative;
    // one always exists since alpha is odd.
    long binv = k.beta_inverse();
    long bb = 0;
    for (long cand : {k.beta(), binv, a - k.beta(), a - binv})
        if (cand % 2 == 1) {
            bb = cand;
            break;
        }
    if (bb == 0)
        throw InternalError("no odd beta representative");

    // Relator r = x w y^-1 w^-1 with w = y^e1 x^e2 ... x^e_{a-1},
    // e_i = (-1)^floor(i*bb/a). Both generators abelianize to t.
    std::vector<int> eps(a - 1);
    for (long i = 1; i < a; i++)
        eps[i - 1] = ((i * bb / a) % 2 == 0) ? 1 : -1;

    std::vector<std::pair<bool, int>> word; // (is_x, exponent +-1)
    word.reserve(2 * a);
    word.emplace_back(true, 1); // leading x
    for (long i = 1; i < a; i++)
        word.emplace_back(i % 2 == 0, eps[i - 1]); // w: y,x,y,...
    word.emplace_back(false, -1);                  // y^-1
    for (long i = a - 1; i >= 1; i--)
        word.emplace_back(i % 2 == 0, -eps[i - 1]); // w^-1

    // Fox derivative d/dx, abelianized: a Laurent polynomial in t.
    std::map<long, Int> laurent;
    long exp = 0;
    for (auto [is_x, e] : word) {
        if (is_x) {
            if (e == 1)
                laurent[exp] += 1;
            else
                laurent[exp - 1] -= 1;
        }
        exp += e;
    }

    long lo = 0;
    bool seen = false;
    for (const auto& [d, c] : laurent)
        if (c != 0 && (!seen || d < lo)) {
            lo = d;
            seen = true;
        }
    if (!seen)
        throw InternalError("vanishing Fox derivative");
    long hi = lo;
    for (const auto& [d, c] : laurent)
        if (c != 0 && d > hi)
            hi = d;
    std::vector<Int> coeffs(hi - lo + 1, Int(0));
    for (const auto& [d, c] : laurent)
        if (d >= lo && d <= hi)
            coeffs[d - lo] = c;
    IntPoly delta(std::move(coeffs));
    if (delta.leading() < 0)
        delta = -delta;

    Int at1 = delta.eval(1);
    if (at1 != 1 && at1 != -1)
        throw InternalError("Alexander normalization: delta(1) != +-1");
    if (abs(delta.eval(-1)) != a)
        throw InternalError("Alexander determinant != alpha");
    return delta;
}

bool is_fibered(const TwoBridgeKnot& k) {
    return abs(alexander(k).leading()) == 1;
}

bool admissible_alexander(const TwoBridgeKnot& k, const Slope& s) {
    long ap = std::abs(s.p);
    long pp = (ap % 2 == 1) ? ap : ap / 2;
    IntPoly delta = alexander(k);
    if (pp == 1)
        return true;
    if (pp == 0) {
        for (long n = 1; n <= 2L * delta.degree() + 2; n++)
            if (has_root_of_unity_root(delta, n))
                return false;
        return true;
    }
    return !has_root_of_unity_root(delta, pp);
}

} // namespace c2b
