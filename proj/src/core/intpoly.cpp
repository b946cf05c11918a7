#include "core/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace c2b {

static const Int kZero = 0;

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Int& c, int exp) {
    std::vector<Int> v(exp + 1, kZero);
    v[exp] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return kZero;
    return c_[i];
}

const Int& IntPoly::leading() const {
    if (is_zero())
        throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); i++) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero())
        return IntPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); i++)
        for (size_t j = 0; j < o.c_.size(); j++)
            v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero())
        return IntPoly();
    Int g = content();
    if (leading() < 0) g = -g;
    return div_scalar_exact(g);
}

IntPoly IntPoly::div_scalar_exact(const Int& k) const {
    if (k == 0)
        throw InternalError("division by zero scalar");
    std::vector<Int> v(c_);
    for (auto& x : v) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
        if (r != 0)
            throw InternalError("inexact scalar division of polynomial");
        x = q;
    }
    return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero())
        return std::nullopt;
    if (is_zero())
        return IntPoly();
    // Long division over Q; succeed only if quotient is integral and remainder 0.
    std::vector<Rational> rem(c_.size());
    for (size_t i = 0; i < c_.size(); i++) rem[i] = Rational(c_[i]);
    int dd = d.degree();
    int qd = degree() - dd;
    if (qd < 0)
        return std::nullopt;
    std::vector<Rational> q(qd + 1);
    Rational lead(d.leading());
    for (int i = qd; i >= 0; i--) {
        Rational f = rem[i + dd] / lead;
        q[i] = f;
        for (int j = 0; j <= dd; j++)
            rem[i + j] -= f * Rational(d.coeff(j));
    }
    for (const auto& r : rem)
        if (r != 0)
            return std::nullopt;
    std::vector<Int> qi(qd + 1);
    for (int i = 0; i <= qd; i++) {
        if (q[i].get_den() != 1)
            return std::nullopt;
        qi[i] = q[i].get_num();
    }
    return IntPoly(std::move(qi));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; i--) {
        const Int& c = coeff(i);
        if (c == 0)
            continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0)
            out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero())
        throw InternalError("pseudo-remainder by zero");
    IntPoly r = a;
    int db = b.degree();
    int steps = a.degree() - db + 1;
    if (steps <= 0)
        return r;
    const Int& lb = b.leading();
    for (int k = 0; k < steps; k++) {
        if (r.is_zero() || r.degree() < db) {
            // Keep the pseudo-remainder convention lb^steps * a = q*b + r.
            std::vector<Int> v(r.coeffs());
            for (auto& x : v) x *= lb;
            r = IntPoly(std::move(v));
            continue;
        }
        std::vector<Int> v(r.coeffs());
        int dr = r.degree();
        const Int lr = r.leading();
        for (auto& x : v) x *= lb;
        for (int j = 0; j <= db; j++)
            v[dr - db + j] -= lr * b.coeff(j);
        r = IntPoly(std::move(v));
    }
    return r;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zero polynomials");
    if (a.is_zero())
        return b.primitive_part();
    if (b.is_zero())
        return a.primitive_part();
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree())
        std::swap(A, B);
    Int g = 1, h = 1;
    for (;;) {
        if (B.degree() == 0)
            return IntPoly::constant(1);
        int d = A.degree() - B.degree();
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero())
            return B.primitive_part();
        Int hd = h;
        for (int i = 1; i < d; i++) hd *= h;   // h^d (d >= 0)
        if (d == 0) hd = 1;
        A = B;
        B = R.div_scalar_exact(g * hd);
        g = A.leading();
        if (d > 0) {
            Int gd = g;
            for (int i = 1; i < d; i++) gd *= g;
            Int hd1 = 1;
            for (int i = 1; i < d; i++) hd1 *= h;
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
            if (r != 0)
                throw InternalError("subresultant bookkeeping not exact");
            h = q;
        }
    }
}

bool has_root_of_unity_root(const IntPoly& p, long n) {
    if (n < 1)
        throw DomainError("root-of-unity order must be >= 1");
    if (p.is_zero())
        throw DomainError("zero polynomial has every root");
    IntPoly cyc = IntPoly::monomial(1, static_cast<int>(n)) - IntPoly::constant(1);
    return poly_gcd(p, cyc).degree() > 0;
}

} // namespace c2b
