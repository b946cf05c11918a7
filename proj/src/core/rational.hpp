#pragma once

#include <gmpxx.h>
#include <string>

#include "core/errors.hpp"

namespace c2b {

using Int = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with positive denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace c2b
