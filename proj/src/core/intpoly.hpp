#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace c2b {

// Dense univariate polynomial over Z, coefficient of t^i at index i.
// Always stored trimmed: no trailing zero coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, int exp);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const; // 0 outside the stored range
    const Int& leading() const;    // requires nonzero
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const = default;

    Int content() const;          // gcd of coefficients, >= 0; 0 for zero poly
    IntPoly primitive_part() const; // content 1, leading coefficient positive

    // Quotient when division is exact over Q and lands in Z[t]; nullopt otherwise.
    std::optional<IntPoly> divide_exact(const IntPoly& d) const;
    // Divide every coefficient by k; throws InternalError if not exact.
    IntPoly div_scalar_exact(const Int& k) const;

    // Mirror t -> 1/t scaled by t^degree.
    IntPoly reversed() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// Primitive gcd over Q via the subresultant pseudo-remainder sequence.
// Result is primitive with positive leading coefficient. Errors if both zero.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Does p share a root with t^n - 1 (some n-th root of unity)? Requires n >= 1.
bool has_root_of_unity_root(const IntPoly& p, long n);

} // namespace c2b
