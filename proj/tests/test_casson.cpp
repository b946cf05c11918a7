#include "doctest.h"

#include <cstdlib>
#include <numeric>
#include <set>

#include "core/casson.hpp"

using namespace c2b;

TEST_CASE("correction terms") {
    auto [e0a, e1a] = correction_terms(TwoBridgeKnot(3, 1));
    CHECK(e0a == 0);
    CHECK(e1a == make_rational(1, 2));
    CHECK(correction_terms(TwoBridgeKnot(15, 11)).second == make_rational(7, 2));
    CHECK(correction_terms(TwoBridgeKnot(27, 10)).second == make_rational(13, 2));
}

TEST_CASE("admissibility reports") {
    auto a = admissibility(TwoBridgeKnot(5, 2), parse_slope("4/1"));
    CHECK(a.regular);
    CHECK(a.is_boundary_slope);
    CHECK(a.strict == Strictness::Yes);
    CHECK_FALSE(a.admissible);

    auto b = admissibility(TwoBridgeKnot(5, 2), parse_slope("0/1"));
    CHECK(b.is_boundary_slope);
    CHECK(b.strict == Strictness::No); // fibered, only the Seifert surface at 0
    CHECK(b.alexander_ok);
    CHECK(b.admissible);

    auto c = admissibility(TwoBridgeKnot(3, 1), parse_slope("5/1"));
    CHECK_FALSE(c.is_boundary_slope);
    CHECK(c.admissible);

    // 5_2 is not fibered, so its slope-0 boundary slope is strict
    auto d = admissibility(TwoBridgeKnot(7, 3), parse_slope("0/1"));
    CHECK(d.is_boundary_slope);
    CHECK(d.strict == Strictness::Yes);
    CHECK_FALSE(d.admissible);
}

TEST_CASE("casson invariant values") {
    CHECK(casson_invariant(TwoBridgeKnot(3, 1), parse_slope("1/1")).value == 2);
    CHECK(casson_invariant(TwoBridgeKnot(5, 2), parse_slope("0/1")).value == 4);
    CHECK(casson_invariant(TwoBridgeKnot(27, 10), parse_slope("1/2")).value == 70);
    CHECK(casson_invariant(TwoBridgeKnot(5, 2), parse_slope("1/1")).value == 3);

    auto r = casson_invariant(TwoBridgeKnot(27, 10), parse_slope("1/2"));
    CHECK(r.seminorm_value == 153);
    CHECK(r.correction == make_rational(13, 2));
    CHECK(r.parity == 1);
    CHECK(r.value == r.seminorm_value / 2 - r.correction);
}

TEST_CASE("meridian surgery gives zero for alpha <= 45") {
    for (long a = 3; a <= 45; a += 2)
        for (long b = 1; b < a; b++)
            if (std::gcd(a, b) == 1)
                CHECK(casson_invariant(TwoBridgeKnot(a, b), Slope{1, 0}).value == 0);
}

TEST_CASE("closed double twist formulas match enumeration") {
    for (long l = 2; l <= 5; l++)
        for (long m = 2; m <= 5; m++) {
            if (l % 2 == 1 && m % 2 == 1)
                continue;
            Seminorm caseI(TwoBridgeKnot(l * m + 1, m));
            Seminorm caseII(TwoBridgeKnot(l * m - 1, m));
            for (long p = -8; p <= 8; p++)
                for (long q = -8; q <= 8; q++) {
                    CHECK(double_twist_norm2({l, m, true, false}, p, q) ==
                          Rational(2) * caseI.eval_raw(p, q));
                    CHECK(double_twist_norm2({l, m, false, false}, p, q) ==
                          Rational(2) * caseII.eval_raw(p, q));
                }
        }
}

TEST_CASE("casson_double_twist equals casson_invariant") {
    long cases[][2] = {{2, -2}, {2, 2}, {4, 4}, {3, -4}, {-4, -4}, {5, 2}, {2, -5}};
    for (auto [l, m] : cases) {
        TwoBridgeKnot k = from_double_twist(make_double_twist(l, m));
        for (long p = -6; p <= 6; p++)
            for (long q = 1; q <= 4; q++) {
                if (std::gcd(std::abs(p), q) != 1)
                    continue;
                Slope s = make_slope(p, q);
                CHECK(casson_double_twist(make_double_twist(l, m), s).value ==
                      casson_invariant(k, s).value);
            }
    }
}

TEST_CASE("exceptional slopes") {
    CHECK(exceptional_slopes(from_double_twist(make_double_twist(2, -2))) ==
          std::set<long>{4, -4});
    CHECK(exceptional_slopes(from_double_twist(make_double_twist(4, 4))) ==
          std::set<long>{0});
    CHECK(exceptional_slopes(TwoBridgeKnot(13, 5)) == std::set<long>{});
    CHECK(exceptional_slopes(TwoBridgeKnot(7, 2)) == std::set<long>{-4});
    CHECK(exceptional_slopes(TwoBridgeKnot(13, 3)) == std::set<long>{8});
    // torus knots are excluded by definition
    CHECK(exceptional_slopes(TwoBridgeKnot(9, 1)) == std::set<long>{});
    // equivalence must not change the answer
    for (long a = 3; a <= 45; a += 2)
        for (long b = 1; b < a; b++)
            if (std::gcd(a, b) == 1) {
                TwoBridgeKnot k(a, b);
                CHECK(exceptional_slopes(k) ==
                      exceptional_slopes(TwoBridgeKnot(a, k.beta_inverse())));
            }
}

TEST_CASE("nontriviality classification") {
    TwoBridgeKnot fig8(5, 2);
    CHECK(nontriviality(fig8, parse_slope("4/1")) == Nontriviality::Excluded);
    CHECK(nontriviality(fig8, parse_slope("1/1")) == Nontriviality::Positive);
    CHECK(nontriviality(fig8, parse_slope("1/0")) == Nontriviality::Meridian);
    CHECK_THROWS_AS(nontriviality(TwoBridgeKnot(3, 1), parse_slope("1/1")),
                    DomainError);
}

TEST_CASE("lambda prime") {
    CHECK(lambda_prime(TwoBridgeKnot(3, 1)) == 3);
    CHECK(lambda_prime(TwoBridgeKnot(5, 1)) == 10);
    CHECK(lambda_prime(TwoBridgeKnot(5, 2)) == 4);
    for (long a = 3; a <= 45; a += 2)
        for (long b = 1; b < a; b++)
            if (std::gcd(a, b) == 1)
                CHECK(lambda_prime(TwoBridgeKnot(a, b)) > 0);
}
