// Acceptance harness: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "core/alexander.hpp"
#include "core/apoly.hpp"
#include "core/casson.hpp"
#include "core/golden.hpp"
#include "core/seminorm.hpp"
#include "core/surfaces.hpp"

using namespace c2b;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(int idx, const char* name, bool ok, double secs,
            const std::string& note = "") {
    std::printf("%s  criterion %2d  %-28s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                idx, name, secs, note.empty() ? "" : "  -- ", note.c_str());
    if (!ok)
        failures++;
}

std::vector<TwoBridgeKnot> all_knots(long max_alpha) {
    std::vector<TwoBridgeKnot> v;
    for (long a = 3; a <= max_alpha; a += 2)
        for (long b = 1; b < a; b++)
            if (std::gcd(a, b) == 1)
                v.emplace_back(a, b);
    return v;
}

Rational lambda_raw(const Seminorm& n, long p, long q, const Rational& e1) {
    Rational val = n.eval_raw(p, q) / 2;
    if (std::abs(p) % 2 == 1)
        val -= e1;
    return val;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <table.tsv>\n", argv[0]);
        return 64;
    }
    const std::string table_path = argv[1];

    // 1. Reference table verifies row by row with only the documented
    //    transcription errata flagged as known mismatches.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string note;
        try {
            auto rows = parse_table_file(table_path);
            ok = rows.size() == 26;
            TableReport rep = verify_table(rows);
            std::set<std::string> known;
            for (const auto& r : rep.rows)
                if (r.status == RowStatus::KnownMismatch)
                    known.insert(r.name);
            ok = ok && rep.failed == 0 &&
                 known == std::set<std::string>{"7_4", "8_8", "8_9"};
            note = "known mismatches: 7_4 deg_M (printed 38, computed 30) plus "
                   "two further documented table typos (8_8, 8_9 surface lists)";
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        double secs = seconds_since(t0);
        report(1, "reference table", ok && secs < 5.0, secs, note);
    }

    // 2. Seminorm display of K(27,10): 2|p| + 3|p+4q| + 5|p-6q| + 3|p-12q|.
    {
        auto t0 = std::chrono::steady_clock::now();
        Seminorm n(TwoBridgeKnot(27, 10));
        bool ok = n.terms() == std::vector<std::pair<long, long>>{
                                   {-4, 6}, {0, 4}, {6, 10}, {12, 6}};
        ok = ok && n.eval_raw(1, 2) == 153;
        ok = ok &&
             casson_invariant(TwoBridgeKnot(27, 10), make_slope(1, 2)).value == 70;
        report(2, "8_11 display", ok, seconds_since(t0));
    }

    // 3. Sum of effective weights is (alpha-1)/2 = ||1/0|| for alpha <= 99.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& k : all_knots(99)) {
            long doubled = 0;
            for (const auto& d : all_surfaces(k))
                doubled += d.doubled_weight;
            ok = ok && doubled == k.alpha() - 1;
            ok = ok && Seminorm(k).eval_raw(1, 0) ==
                           make_rational(k.alpha() - 1, 2);
        }
        double secs = seconds_since(t0);
        report(3, "weight-sum law", ok && secs < 10.0, secs);
    }

    // 4. Closed double twist formulas agree with enumeration, and the closed
    //    deg_M values match ||0/1||.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (long l = 2; l <= 8 && ok; l++)
            for (long m = 2; m <= 8 && ok; m++) {
                if (l % 2 == 1 && m % 2 == 1)
                    continue;
                for (bool case_one : {true, false}) {
                    DoubleTwistNormal n{l, m, case_one, false};
                    Seminorm sem(double_twist_knot(n));
                    for (long p = -20; p <= 20; p++)
                        for (long q = -20; q <= 20; q++)
                            ok = ok && double_twist_norm2(n, p, q) ==
                                           Rational(2) * sem.eval_raw(p, q);
                    DoubleTwist j{l, case_one ? -m : m};
                    ok = ok && Rational(double_twist_degM(j)) == sem.eval_raw(0, 1);
                }
            }
        report(4, "closed-form equivalence", ok, seconds_since(t0));
    }

    // 5. Torus degrees agree with the two-bridge computation; trefoil
    //    lambda' = 3 = pq(p-1)(q-1)/4 at (p,q) = (2,3).
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (long a = 3; a <= 99; a += 2) {
            AhatDegrees tb = ahat_degrees(TwoBridgeKnot(a, 1));
            AhatDegrees tor = torus_ahat_degrees(2, a);
            ok = ok && tb.deg_M == tor.deg_M && tb.deg_L == tor.deg_L;
        }
        ok = ok && lambda_prime(TwoBridgeKnot(3, 1)) == 3;
        ok = ok && make_rational(2 * 3 * 1 * 2, 4) == 3;
        report(5, "torus consistency", ok, seconds_since(t0));
    }

    // 6. Meridian surgery has lambda = 0 for every knot with alpha <= 99.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& k : all_knots(99))
            ok = ok && casson_invariant(k, Slope{1, 0}).value == 0;
        report(6, "correction-term law", ok, seconds_since(t0));
    }

    // 7. For fixed small p the increments lambda(p/(q+1)) - lambda(p/q)
    //    stabilize at lambda' = 1/2 ||0/1|| once q >= 50.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& k : all_knots(45)) {
            Seminorm n(k);
            Rational e1 = correction_terms(k).second;
            Rational lp = lambda_prime(k);
            for (long p = -3; p <= 3; p++)
                for (long q = 50; q <= 56; q++)
                    ok = ok && lambda_raw(n, p, q + 1, e1) -
                                       lambda_raw(n, p, q, e1) ==
                                   lp;
        }
        report(7, "lambda' stability", ok, seconds_since(t0));
    }

    // 8. Alexander sanity for alpha <= 99; the trefoil rejects exactly the
    //    slopes whose relevant order p' is divisible by 6, |p| <= 60.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& k : all_knots(99)) {
            IntPoly d = alexander(k);
            Int at1 = d.eval(1);
            ok = ok && (at1 == 1 || at1 == -1) && abs(d.eval(-1)) == k.alpha();
        }
        TwoBridgeKnot tref(3, 1);
        for (long p = -60; p <= 60 && ok; p++) {
            long pp = std::abs(p) % 2 == 1 ? std::abs(p) : std::abs(p) / 2;
            bool reject = pp % 6 == 0;
            ok = ok && admissible_alexander(tref, make_slope(p, 1)) == !reject;
        }
        report(8, "alexander sanity", ok, seconds_since(t0));
    }

    // 9. Every admissible slope |p|,|q| <= 10 outside the exceptional set and
    //    the meridian yields lambda > 0, for hyperbolic knots with alpha <= 45.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        long checked = 0;
        for (const auto& k : all_knots(45)) {
            if (k.classify() != KnotClass::Hyperbolic)
                continue;
            std::set<long> exc = exceptional_slopes(k);
            for (long p = -10; p <= 10; p++)
                for (long q = 1; q <= 10; q++) {
                    if (std::gcd(std::abs(p), q) != 1)
                        continue;
                    Slope s = make_slope(p, q);
                    if (s.q == 1 && exc.count(s.p))
                        continue;
                    CassonResult r = casson_invariant(k, s);
                    if (!r.diagnostics.admissible)
                        continue;
                    checked++;
                    ok = ok && r.value > 0 &&
                         nontriviality(k, s) == Nontriviality::Positive;
                }
        }
        report(9, "nontriviality audit", ok && checked > 0, seconds_since(t0),
               std::to_string(checked) + " admissible slopes checked");
    }

    // 10. Invariance: beta inversion fixes everything; the mirror negates
    //     slopes; mirroring twice is the identity. alpha <= 99.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& k : all_knots(99)) {
            TwoBridgeKnot inv(k.alpha(), k.beta_inverse());
            TwoBridgeKnot mir = k.mirror();
            ok = ok && mir.mirror().beta() == k.beta();
            ok = ok && k.equivalent(inv);

            Seminorm n(k), ni(inv), nm(mir);
            ok = ok && n.terms() == ni.terms();
            std::vector<std::pair<long, long>> negated;
            for (auto it = n.terms().rbegin(); it != n.terms().rend(); ++it)
                negated.emplace_back(-it->first, it->second);
            ok = ok && nm.terms() == negated;

            AhatDegrees d = ahat_degrees(k), dm = ahat_degrees(mir);
            ok = ok && d.deg_M == dm.deg_M && d.deg_L == dm.deg_L;
            ok = ok && alexander(inv) == alexander(k) &&
                 alexander(mir) == alexander(k);
        }
        report(10, "invariance suite", ok, seconds_since(t0));
    }

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
