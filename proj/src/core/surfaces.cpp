#include "core/surfaces.hpp"

#include <algorithm>

namespace c2b {

Rational cf_value(const ContinuedFraction& cf) {
    if (cf.empty())
        throw DomainError("empty continued fraction");
    Rational v = 0;
    for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
        Rational d = Rational(*it) + v;
        if (d == 0)
            throw DomainError("continued fraction hits a zero denominator");
        v = Rational(1) / d;
    }
    return v;
}

namespace {

// floor/ceil of 1/r as integers.
std::pair<Int, Int> inv_floor_ceil(const Rational& r) {
    Int num = r.get_num(), den = r.get_den(); // inverse is den/num
    Int f, c;
    mpz_fdiv_q(f.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    return {f, c};
}

void dfs(const Rational& r, ContinuedFraction& acc,
         std::vector<ContinuedFraction>& out) {
    Rational inv = Rational(1) / r;
    auto [f, c] = inv_floor_ceil(r);
    for (const Int& n : {f, c}) {
        Rational s = inv - Rational(n);
        if (abs(n) < 2)
            continue;
        long nl = n.get_si();
        if (s == 0) {
            acc.push_back(nl);
            out.push_back(acc);
            acc.pop_back();
        } else if (abs(s) < 1) {
            acc.push_back(nl);
            dfs(s, acc, out);
            acc.pop_back();
        }
        if (f == c)
            break;
    }
}

} // namespace

std::vector<ContinuedFraction> enumerate_expansions(const Rational& r) {
    if (r == 0 || abs(r) >= 1)
        throw DomainError("expansions need r in (-1,1) and r != 0");
    std::vector<ContinuedFraction> out;
    ContinuedFraction acc;
    dfs(r, acc, out);
    return out;
}

std::pair<int, int> sign_pattern_counts(const ContinuedFraction& cf) {
    int plus = 0;
    for (size_t i = 0; i < cf.size(); i++)
        if ((cf[i] > 0) == (i % 2 == 0))
            plus++;
    return {plus, static_cast<int>(cf.size()) - plus};
}

long boundary_slope(const ContinuedFraction& cf, const ContinuedFraction& seifert) {
    auto [np, nm] = sign_pattern_counts(cf);
    auto [sp, sm] = sign_pattern_counts(seifert);
    return 2 * ((np - nm) - (sp - sm));
}

namespace {

bool all_even(const ContinuedFraction& cf) {
    return std::all_of(cf.begin(), cf.end(), [](long n) { return n % 2 == 0; });
}

// Greedy even expansion of r; false if none along this branch (1/r odd integer).
bool even_expansion(const Rational& r, ContinuedFraction& acc) {
    Rational inv = Rational(1) / r;
    Int num = r.get_num(), den = r.get_den();
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    Int n = (f % 2 == 0) ? f : f + 1; // the unique even integer with |1/r - n| < 1
    Rational s = inv - Rational(n);
    if (abs(n) < 2 || abs(s) >= 1)
        return false;
    acc.push_back(n.get_si());
    if (s == 0)
        return true;
    return even_expansion(s, acc);
}

} // namespace

ContinuedFraction seifert_expansion(const TwoBridgeKnot& k) {
    Rational r1 = make_rational(k.beta(), k.alpha());
    Rational r2 = make_rational(k.beta() - k.alpha(), k.alpha());
    ContinuedFraction a, b;
    bool oka = even_expansion(r1, a);
    bool okb = even_expansion(r2, b);
    if (oka == okb)
        throw InternalError("expected exactly one all-even expansion");
    return oka ? a : b;
}

std::vector<SurfaceDatum> all_surfaces(const TwoBridgeKnot& k) {
    auto exps = enumerate_expansions(make_rational(k.beta(), k.alpha()));
    auto more = enumerate_expansions(make_rational(k.beta() - k.alpha(), k.alpha()));
    exps.insert(exps.end(), more.begin(), more.end());

    ContinuedFraction seif = seifert_expansion(k);
    int even_count = 0;
    for (const auto& e : exps)
        if (all_even(e))
            even_count++;
    if (even_count != 1)
        throw InternalError("expected a unique all-even expansion");

    std::vector<SurfaceDatum> out;
    long total = 0;
    for (const auto& e : exps) {
        SurfaceDatum d;
        d.expansion = e;
        d.is_seifert = (e == seif);
        d.slope = boundary_slope(e, seif);
        long w = 1;
        for (long n : e)
            w *= std::abs(n) - 1;
        if (d.is_seifert)
            w -= 1;
        d.doubled_weight = w;
        total += w;
        out.push_back(std::move(d));
    }
    if (total != k.alpha() - 1)
        throw InternalError("doubled weights must sum to alpha - 1");
    std::sort(out.begin(), out.end(), [](const SurfaceDatum& a, const SurfaceDatum& b) {
        if (a.slope != b.slope)
            return a.slope < b.slope;
        return a.expansion < b.expansion;
    });
    return out;
}

} // namespace c2b
