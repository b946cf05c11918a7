#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "casson2b.h"

TEST_CASE("knot creation and parsing") {
    c2b_knot* k = nullptr;
    REQUIRE(c2b_knot_parse("K(27,10)", &k) == C2B_OK);
    CHECK(c2b_knot_alpha(k) == 27);
    CHECK(c2b_knot_beta(k) == 10);
    CHECK_FALSE(c2b_knot_is_torus(k));

    c2b_knot* m = nullptr;
    REQUIRE(c2b_knot_mirror(k, &m) == C2B_OK);
    CHECK(c2b_knot_beta(m) == 17);
    CHECK_FALSE(c2b_knot_equivalent(k, m));
    c2b_knot_free(m);
    c2b_knot_free(k);

    c2b_knot* j = nullptr;
    REQUIRE(c2b_knot_from_double_twist(2, -2, &j) == C2B_OK);
    CHECK(c2b_knot_alpha(j) == 5);
    CHECK(c2b_knot_beta(j) == 2);
    CHECK_FALSE(c2b_knot_input_mirrored(j));
    c2b_knot_free(j);

    c2b_knot* bad = nullptr;
    CHECK(c2b_knot_create(4, 1, &bad) == C2B_EDOMAIN);
    CHECK(bad == nullptr);
    CHECK(std::strlen(c2b_last_error()) > 0);
    CHECK(c2b_knot_parse("nonsense", &bad) == C2B_EPARSE);
}

TEST_CASE("slopes") {
    c2b_slope s;
    REQUIRE(c2b_slope_parse("6/-4", &s) == C2B_OK);
    CHECK(s.p == -3);
    CHECK(s.q == 2);
    REQUIRE(c2b_slope_make(-5, 0, &s) == C2B_OK);
    CHECK(s.p == 1);
    CHECK(s.q == 0);
    CHECK(c2b_slope_make(0, 0, &s) == C2B_EDOMAIN);
    CHECK(c2b_slope_parse("", &s) == C2B_EPARSE);
}

TEST_CASE("surfaces") {
    c2b_knot* k = nullptr;
    REQUIRE(c2b_knot_parse("K(3,1)", &k) == C2B_OK);
    c2b_surfaces* s = nullptr;
    REQUIRE(c2b_knot_surfaces(k, &s) == C2B_OK);
    REQUIRE(c2b_surfaces_count(s) == 2);
    CHECK(c2b_surface_slope(s, 0) == 0);
    CHECK(c2b_surface_doubled_weight(s, 0) == 0);
    CHECK(c2b_surface_is_seifert(s, 0));
    CHECK(c2b_surface_slope(s, 1) == 6);
    CHECK(c2b_surface_doubled_weight(s, 1) == 2);
    REQUIRE(c2b_surface_expansion_len(s, 1) == 1);
    CHECK(c2b_surface_expansion_entry(s, 1, 0) == 3);
    c2b_surfaces_free(s);
    c2b_knot_free(k);
}

TEST_CASE("seminorm") {
    c2b_knot* k = nullptr;
    REQUIRE(c2b_knot_parse("K(27,10)", &k) == C2B_OK);
    c2b_seminorm* n = nullptr;
    REQUIRE(c2b_seminorm_create(k, &n) == C2B_OK);
    REQUIRE(c2b_seminorm_term_count(n) == 4);
    CHECK(c2b_seminorm_term_slope(n, 0) == -4);
    CHECK(c2b_seminorm_term_weight(n, 0) == 6);
    CHECK(c2b_seminorm_term_slope(n, 2) == 6);
    CHECK(c2b_seminorm_term_weight(n, 2) == 10);
    long num = 0, den = 0;
    REQUIRE(c2b_seminorm_eval(n, 1, 2, &num, &den) == C2B_OK);
    CHECK(num == 153);
    CHECK(den == 1);
    CHECK(c2b_seminorm_is_norm(n));
    c2b_seminorm_free(n);
    c2b_knot_free(k);
}

TEST_CASE("alexander") {
    c2b_knot* k = nullptr;
    REQUIRE(c2b_knot_parse("K(7,2)", &k) == C2B_OK);
    size_t len = 0;
    CHECK(c2b_knot_alexander(k, nullptr, 0, &len) == C2B_ERANGE);
    REQUIRE(len == 3);
    long coeffs[3];
    REQUIRE(c2b_knot_alexander(k, coeffs, 3, &len) == C2B_OK);
    CHECK(coeffs[0] == 2);
    CHECK(coeffs[1] == -3);
    CHECK(coeffs[2] == 2);
    char* s = nullptr;
    REQUIRE(c2b_knot_alexander_str(k, &s) == C2B_OK);
    CHECK(std::string(s) == "2t^2 - 3t + 2");
    c2b_string_free(s);
    CHECK_FALSE(c2b_knot_is_fibered(k));
    c2b_knot_free(k);
}

TEST_CASE("casson and admissibility") {
    c2b_knot* k = nullptr;
    REQUIRE(c2b_knot_parse("K(5,2)", &k) == C2B_OK);
    c2b_slope s{4, 1};
    c2b_admissibility adm;
    REQUIRE(c2b_knot_admissibility(k, s, &adm) == C2B_OK);
    CHECK(adm.regular == 1);
    CHECK(adm.is_boundary_slope == 1);
    CHECK(adm.strict == 1);
    CHECK(adm.admissible == 0);

    c2b_casson c;
    c2b_slope zero{0, 1};
    REQUIRE(c2b_casson_invariant(k, zero, &c) == C2B_OK);
    CHECK(c.value_num == 4);
    CHECK(c.value_den == 1);
    CHECK(c.seminorm_num == 8);
    CHECK(c.parity == 0);
    CHECK(c.diagnostics.admissible == 1);

    c2b_casson cj;
    REQUIRE(c2b_casson_double_twist(2, -2, zero, &cj) == C2B_OK);
    CHECK(cj.value_num == 4);
    CHECK(cj.value_den == 1);

    long num = 0, den = 0;
    REQUIRE(c2b_lambda_prime(k, &num, &den) == C2B_OK);
    CHECK(num == 4);
    CHECK(den == 1);

    long slopes[2];
    size_t len = 0;
    REQUIRE(c2b_exceptional_slopes(k, slopes, 2, &len) == C2B_OK);
    REQUIRE(len == 2);
    CHECK(slopes[0] == -4);
    CHECK(slopes[1] == 4);

    c2b_surgery_class cls;
    REQUIRE(c2b_nontriviality(k, s, &cls) == C2B_OK);
    CHECK(cls == C2B_SURGERY_EXCLUDED);
    c2b_slope one{1, 1};
    REQUIRE(c2b_nontriviality(k, one, &cls) == C2B_OK);
    CHECK(cls == C2B_SURGERY_POSITIVE);
    c2b_knot_free(k);

    c2b_knot* tref = nullptr;
    REQUIRE(c2b_knot_parse("K(3,1)", &tref) == C2B_OK);
    CHECK(c2b_nontriviality(tref, one, &cls) == C2B_EDOMAIN);
    c2b_knot_free(tref);
}

TEST_CASE("degrees") {
    c2b_knot* k = nullptr;
    REQUIRE(c2b_knot_parse("K(27,10)", &k) == C2B_OK);
    long degM = 0, degL = 0;
    REQUIRE(c2b_ahat_degrees(k, &degM, &degL) == C2B_OK);
    CHECK(degM == 78);
    CHECK(degL == 13);
    c2b_knot_free(k);

    REQUIRE(c2b_double_twist_degM(4, -3, &degM) == C2B_OK);
    CHECK(degM == 52);
    REQUIRE(c2b_torus_ahat_degrees(2, 5, &degM, &degL) == C2B_OK);
    CHECK(degM == 20);
    CHECK(degL == 2);
    CHECK(c2b_torus_ahat_degrees(2, 4, &degM, &degL) == C2B_EDOMAIN);
}

TEST_CASE("reference table") {
    c2b_table* t = nullptr;
    REQUIRE(c2b_table_load(TABLE6_TSV, &t) == C2B_OK);
    REQUIRE(c2b_table_row_count(t) == 26);
    CHECK(std::string(c2b_table_row_name(t, 0)) == "3_1");
    CHECK(c2b_table_row_alpha(t, 0) == 3);
    CHECK(c2b_table_row_beta(t, 0) == 1);

    int statuses[3] = {0, 0, 0};
    for (size_t i = 0; i < 26; i++) {
        c2b_row_report r;
        char* note = nullptr;
        REQUIRE(c2b_table_verify_row(t, i, &r, &note) == C2B_OK);
        REQUIRE(r.status >= 0);
        REQUIRE(r.status <= 2);
        statuses[r.status]++;
        if (r.status != 0)
            CHECK(note != nullptr);
        c2b_string_free(note);
    }
    CHECK(statuses[0] == 23);
    CHECK(statuses[1] == 3);
    CHECK(statuses[2] == 0);

    c2b_discovery_hit hits[8];
    size_t len = 0;
    REQUIRE(c2b_table_discover_row(t, 0, 0, hits, 8, &len) == C2B_OK);
    REQUIRE(len >= 1);
    CHECK(hits[0].alpha == 3);
    CHECK(hits[0].beta == 1);
    c2b_table_free(t);

    c2b_table* missing = nullptr;
    CHECK(c2b_table_load("/nonexistent/table.tsv", &missing) == C2B_EIO);
}
