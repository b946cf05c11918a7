#include "casson2b.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/alexander.hpp"
#include "core/apoly.hpp"
#include "core/casson.hpp"
#include "core/golden.hpp"
#include "core/knot.hpp"
#include "core/seminorm.hpp"
#include "core/surfaces.hpp"

using namespace c2b;

namespace {

thread_local std::string g_last_error = "no error";

c2b_status fail(c2b_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Run f, translating exceptions into status codes.
template <typename F>
c2b_status guarded(F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        return fail(C2B_EPARSE, e.what());
    } catch (const DomainError& e) {
        return fail(C2B_EDOMAIN, e.what());
    } catch (const InternalError& e) {
        return fail(C2B_EINTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(C2B_EINTERNAL, e.what());
    }
}

c2b_status put_rational(const Rational& r, long* num, long* den) {
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        return fail(C2B_ERANGE, "rational does not fit in long");
    if (num) *num = r.get_num().get_si();
    if (den) *den = r.get_den().get_si();
    return C2B_OK;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_admissibility(const Admissibility& a, c2b_admissibility* out) {
    out->regular = a.regular ? 1 : 0;
    out->is_boundary_slope = a.is_boundary_slope ? 1 : 0;
    out->strict = a.strict == Strictness::No ? 0
                : a.strict == Strictness::Yes ? 1 : 2;
    out->alexander_ok = a.alexander_ok ? 1 : 0;
    out->admissible = a.admissible ? 1 : 0;
}

c2b_status put_casson(const CassonResult& r, c2b_casson* out) {
    c2b_casson tmp;
    c2b_status st = put_rational(r.value, &tmp.value_num, &tmp.value_den);
    if (st != C2B_OK) return st;
    st = put_rational(r.seminorm_value, &tmp.seminorm_num, &tmp.seminorm_den);
    if (st != C2B_OK) return st;
    st = put_rational(r.correction, &tmp.correction_num, &tmp.correction_den);
    if (st != C2B_OK) return st;
    tmp.parity = r.parity;
    put_admissibility(r.diagnostics, &tmp.diagnostics);
    *out = tmp;
    return C2B_OK;
}

} // namespace

struct c2b_knot {
    TwoBridgeKnot k;
    bool input_mirrored;
};

struct c2b_surfaces {
    std::vector<SurfaceDatum> data;
};

struct c2b_seminorm {
    Seminorm n;
};

struct c2b_table {
    std::vector<GoldenRow> rows;
};

extern "C" {

const char* c2b_last_error(void) { return g_last_error.c_str(); }

void c2b_string_free(char* s) { std::free(s); }

c2b_status c2b_knot_parse(const char* text, c2b_knot** out) {
    if (!text || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        bool mirrored = false;
        TwoBridgeKnot k = parse_knot(text, &mirrored);
        *out = new c2b_knot{k, mirrored};
        return C2B_OK;
    });
}

c2b_status c2b_knot_create(long alpha, long beta, c2b_knot** out) {
    if (!out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        *out = new c2b_knot{TwoBridgeKnot(alpha, beta), false};
        return C2B_OK;
    });
}

c2b_status c2b_knot_from_double_twist(long l, long m, c2b_knot** out) {
    if (!out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        bool mirrored = false;
        TwoBridgeKnot k = from_double_twist(make_double_twist(l, m), &mirrored);
        *out = new c2b_knot{k, mirrored};
        return C2B_OK;
    });
}

void c2b_knot_free(c2b_knot* k) { delete k; }

long c2b_knot_alpha(const c2b_knot* k) { return k->k.alpha(); }
long c2b_knot_beta(const c2b_knot* k) { return k->k.beta(); }
int c2b_knot_is_torus(const c2b_knot* k) {
    return k->k.classify() == KnotClass::Torus ? 1 : 0;
}
int c2b_knot_input_mirrored(const c2b_knot* k) { return k->input_mirrored ? 1 : 0; }

c2b_status c2b_knot_mirror(const c2b_knot* k, c2b_knot** out) {
    if (!k || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        *out = new c2b_knot{k->k.mirror(), false};
        return C2B_OK;
    });
}

int c2b_knot_equivalent(const c2b_knot* a, const c2b_knot* b) {
    return a->k.equivalent(b->k) ? 1 : 0;
}

c2b_status c2b_slope_parse(const char* text, c2b_slope* out) {
    if (!text || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        Slope s = parse_slope(text);
        *out = c2b_slope{s.p, s.q};
        return C2B_OK;
    });
}

c2b_status c2b_slope_make(long p, long q, c2b_slope* out) {
    if (!out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        Slope s = make_slope(p, q);
        *out = c2b_slope{s.p, s.q};
        return C2B_OK;
    });
}

c2b_status c2b_knot_surfaces(const c2b_knot* k, c2b_surfaces** out) {
    if (!k || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        *out = new c2b_surfaces{all_surfaces(k->k)};
        return C2B_OK;
    });
}

void c2b_surfaces_free(c2b_surfaces* s) { delete s; }

size_t c2b_surfaces_count(const c2b_surfaces* s) { return s->data.size(); }
long c2b_surface_slope(const c2b_surfaces* s, size_t i) { return s->data[i].slope; }
long c2b_surface_doubled_weight(const c2b_surfaces* s, size_t i) {
    return s->data[i].doubled_weight;
}
int c2b_surface_is_seifert(const c2b_surfaces* s, size_t i) {
    return s->data[i].is_seifert ? 1 : 0;
}
size_t c2b_surface_expansion_len(const c2b_surfaces* s, size_t i) {
    return s->data[i].expansion.size();
}
long c2b_surface_expansion_entry(const c2b_surfaces* s, size_t i, size_t j) {
    return s->data[i].expansion[j];
}

c2b_status c2b_seminorm_create(const c2b_knot* k, c2b_seminorm** out) {
    if (!k || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        *out = new c2b_seminorm{Seminorm(k->k)};
        return C2B_OK;
    });
}

void c2b_seminorm_free(c2b_seminorm* n) { delete n; }

size_t c2b_seminorm_term_count(const c2b_seminorm* n) { return n->n.terms().size(); }
long c2b_seminorm_term_slope(const c2b_seminorm* n, size_t i) {
    return n->n.terms()[i].first;
}
long c2b_seminorm_term_weight(const c2b_seminorm* n, size_t i) {
    return n->n.terms()[i].second;
}

c2b_status c2b_seminorm_eval(const c2b_seminorm* n, long p, long q, long* num,
                             long* den) {
    if (!n) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] { return put_rational(n->n.eval_raw(p, q), num, den); });
}

int c2b_seminorm_is_norm(const c2b_seminorm* n) { return n->n.is_norm() ? 1 : 0; }

c2b_status c2b_knot_alexander(const c2b_knot* k, long* coeffs, size_t cap,
                              size_t* len) {
    if (!k || !len) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        IntPoly d = alexander(k->k);
        size_t n = d.degree() + 1;
        *len = n;
        if (!coeffs || cap < n)
            return fail(C2B_ERANGE, "coefficient buffer too small");
        for (size_t i = 0; i < n; i++) {
            if (!d.coeff(i).fits_slong_p())
                return fail(C2B_ERANGE, "coefficient does not fit in long");
            coeffs[i] = d.coeff(i).get_si();
        }
        return C2B_OK;
    });
}

c2b_status c2b_knot_alexander_str(const c2b_knot* k, char** out) {
    if (!k || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        *out = dup_string(alexander(k->k).str());
        return C2B_OK;
    });
}

int c2b_knot_is_fibered(const c2b_knot* k) { return is_fibered(k->k) ? 1 : 0; }

c2b_status c2b_knot_admissibility(const c2b_knot* k, c2b_slope s,
                                  c2b_admissibility* out) {
    if (!k || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        put_admissibility(admissibility(k->k, make_slope(s.p, s.q)), out);
        return C2B_OK;
    });
}

c2b_status c2b_casson_invariant(const c2b_knot* k, c2b_slope s, c2b_casson* out) {
    if (!k || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        return put_casson(casson_invariant(k->k, make_slope(s.p, s.q)), out);
    });
}

c2b_status c2b_casson_double_twist(long l, long m, c2b_slope s, c2b_casson* out) {
    if (!out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        return put_casson(
            casson_double_twist(make_double_twist(l, m), make_slope(s.p, s.q)),
            out);
    });
}

c2b_status c2b_lambda_prime(const c2b_knot* k, long* num, long* den) {
    if (!k) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] { return put_rational(lambda_prime(k->k), num, den); });
}

c2b_status c2b_exceptional_slopes(const c2b_knot* k, long* slopes, size_t cap,
                                  size_t* len) {
    if (!k || !len) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        auto e = exceptional_slopes(k->k);
        *len = e.size();
        if (e.empty())
            return C2B_OK;
        if (!slopes || cap < e.size())
            return fail(C2B_ERANGE, "slope buffer too small");
        size_t i = 0;
        for (long s : e)
            slopes[i++] = s;
        return C2B_OK;
    });
}

c2b_status c2b_nontriviality(const c2b_knot* k, c2b_slope s,
                             c2b_surgery_class* out) {
    if (!k || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        switch (nontriviality(k->k, make_slope(s.p, s.q))) {
        case Nontriviality::Positive: *out = C2B_SURGERY_POSITIVE; break;
        case Nontriviality::Meridian: *out = C2B_SURGERY_MERIDIAN; break;
        case Nontriviality::Excluded: *out = C2B_SURGERY_EXCLUDED; break;
        }
        return C2B_OK;
    });
}

c2b_status c2b_ahat_degrees(const c2b_knot* k, long* degM, long* degL) {
    if (!k) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        AhatDegrees d = ahat_degrees(k->k);
        if (degM) *degM = d.deg_M;
        if (degL) *degL = d.deg_L;
        return C2B_OK;
    });
}

c2b_status c2b_double_twist_degM(long l, long m, long* degM) {
    return guarded([&] {
        long d = double_twist_degM(make_double_twist(l, m));
        if (degM) *degM = d;
        return C2B_OK;
    });
}

c2b_status c2b_torus_ahat_degrees(long p, long q, long* degM, long* degL) {
    return guarded([&] {
        AhatDegrees d = torus_ahat_degrees(p, q);
        if (degM) *degM = d.deg_M;
        if (degL) *degL = d.deg_L;
        return C2B_OK;
    });
}

c2b_status c2b_table_load(const char* path, c2b_table** out) {
    if (!path || !out) return fail(C2B_EDOMAIN, "null argument");
    return guarded([&] {
        try {
            *out = new c2b_table{parse_table_file(path)};
        } catch (const ParseError& e) {
            std::string msg = e.what();
            if (msg.find("cannot open") != std::string::npos)
                return fail(C2B_EIO, msg);
            throw;
        }
        return C2B_OK;
    });
}

void c2b_table_free(c2b_table* t) { delete t; }

size_t c2b_table_row_count(const c2b_table* t) { return t->rows.size(); }
const char* c2b_table_row_name(const c2b_table* t, size_t i) {
    return t->rows[i].name.c_str();
}
long c2b_table_row_alpha(const c2b_table* t, size_t i) { return t->rows[i].alpha; }
long c2b_table_row_beta(const c2b_table* t, size_t i) { return t->rows[i].beta; }

c2b_status c2b_table_verify_row(const c2b_table* t, size_t i,
                                c2b_row_report* out, char** note) {
    if (!t || !out || i >= t->rows.size())
        return fail(C2B_EDOMAIN, "bad table row index");
    return guarded([&] {
        RowReport r = verify_row(t->rows[i]);
        out->status = r.status == RowStatus::Pass ? 0
                    : r.status == RowStatus::KnownMismatch ? 1 : 2;
        out->mirror = r.mirror_match ? 1 : 0;
        out->surfaces_ok = r.surfaces_ok ? 1 : 0;
        out->degM_ok = r.degM_ok ? 1 : 0;
        out->degL_ok = r.degL_ok ? 1 : 0;
        out->computed_degM = r.computed.deg_M;
        out->computed_degL = r.computed.deg_L;
        out->expected_degM = r.expected.deg_M;
        out->expected_degL = r.expected.deg_L;
        if (note)
            *note = dup_string(r.note);
        return C2B_OK;
    });
}

c2b_status c2b_table_discover_row(const c2b_table* t, size_t i, long max_alpha,
                                  c2b_discovery_hit* hits, size_t cap,
                                  size_t* len) {
    if (!t || !len || i >= t->rows.size())
        return fail(C2B_EDOMAIN, "bad table row index");
    return guarded([&] {
        auto found = discover_row(t->rows[i], max_alpha);
        *len = found.size();
        if (found.empty())
            return C2B_OK;
        if (!hits || cap < found.size())
            return fail(C2B_ERANGE, "hit buffer too small");
        for (size_t j = 0; j < found.size(); j++)
            hits[j] = c2b_discovery_hit{found[j].alpha, found[j].beta,
                                        found[j].mirror ? 1 : 0};
        return C2B_OK;
    });
}

} // extern "C"
