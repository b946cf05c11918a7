/*
 * casson2b -- exact invariants of Dehn surgeries on two-bridge knots.
 *
 * C interface to the computation core: incompressible surface data,
 * Culler-Shalen seminorms, SL(2,C) Casson invariants of surgered manifolds,
 * Alexander polynomials, A-hat polynomial degrees, and reference table
 * verification. All arithmetic is exact; rationals are returned as
 * numerator/denominator pairs in lowest terms with positive denominator.
 *
 * Every object returned through a handle must be released with the matching
 * _free function. Functions returning c2b_status leave outputs untouched on
 * failure; c2b_last_error() describes the most recent failure on the calling
 * thread.
 */
#ifndef CASSON2B_H
#define CASSON2B_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    C2B_OK = 0,
    C2B_EDOMAIN = 1,   /* mathematically invalid input */
    C2B_EPARSE = 2,    /* malformed text */
    C2B_ERANGE = 3,    /* result does not fit the output type */
    C2B_EINTERNAL = 4, /* violated internal invariant (a bug) */
    C2B_EIO = 5        /* file not readable */
} c2b_status;

/* Message for the last failing call on this thread; never NULL. */
const char* c2b_last_error(void);

/* Free a string allocated by this library. */
void c2b_string_free(char* s);

/* ---- knots ------------------------------------------------------------- */

typedef struct c2b_knot c2b_knot;

/* "K(alpha,beta)" or "J(l,m)". */
c2b_status c2b_knot_parse(const char* text, c2b_knot** out);
c2b_status c2b_knot_create(long alpha, long beta, c2b_knot** out);
c2b_status c2b_knot_from_double_twist(long l, long m, c2b_knot** out);
void c2b_knot_free(c2b_knot* k);

long c2b_knot_alpha(const c2b_knot* k);
long c2b_knot_beta(const c2b_knot* k);
/* 1 iff beta is 1 or alpha-1 (a (2,n) torus knot). */
int c2b_knot_is_torus(const c2b_knot* k);
/* For J inputs: 1 iff K(alpha,beta) is the mirror of the named diagram. */
int c2b_knot_input_mirrored(const c2b_knot* k);
c2b_status c2b_knot_mirror(const c2b_knot* k, c2b_knot** out);
int c2b_knot_equivalent(const c2b_knot* a, const c2b_knot* b);

/* ---- surgery slopes ---------------------------------------------------- */

/* Reduced: gcd(p,q) = 1, q >= 0, and the meridian is 1/0. */
typedef struct {
    long p;
    long q;
} c2b_slope;

c2b_status c2b_slope_parse(const char* text, c2b_slope* out);
c2b_status c2b_slope_make(long p, long q, c2b_slope* out);

/* ---- incompressible surfaces ------------------------------------------- */

typedef struct c2b_surfaces c2b_surfaces;

/* All Hatcher-Thurston surfaces, sorted by (slope, expansion). */
c2b_status c2b_knot_surfaces(const c2b_knot* k, c2b_surfaces** out);
void c2b_surfaces_free(c2b_surfaces* s);

size_t c2b_surfaces_count(const c2b_surfaces* s);
long c2b_surface_slope(const c2b_surfaces* s, size_t i);
long c2b_surface_doubled_weight(const c2b_surfaces* s, size_t i);
int c2b_surface_is_seifert(const c2b_surfaces* s, size_t i);
size_t c2b_surface_expansion_len(const c2b_surfaces* s, size_t i);
long c2b_surface_expansion_entry(const c2b_surfaces* s, size_t i, size_t j);

/* ---- seminorm ---------------------------------------------------------- */

typedef struct c2b_seminorm c2b_seminorm;

c2b_status c2b_seminorm_create(const c2b_knot* k, c2b_seminorm** out);
void c2b_seminorm_free(c2b_seminorm* n);

/* Aggregated (slope, doubled weight) terms, ascending by slope. */
size_t c2b_seminorm_term_count(const c2b_seminorm* n);
long c2b_seminorm_term_slope(const c2b_seminorm* n, size_t i);
long c2b_seminorm_term_weight(const c2b_seminorm* n, size_t i);

/* ||p/q|| on the raw lattice point (p,q); coprimality not required. */
c2b_status c2b_seminorm_eval(const c2b_seminorm* n, long p, long q,
                             long* num, long* den);
/* 1 iff at least two slopes carry positive weight. */
int c2b_seminorm_is_norm(const c2b_seminorm* n);

/* ---- Alexander polynomial ---------------------------------------------- */

/* Coefficients of t^0..t^deg; *len gets deg+1. Fails with C2B_ERANGE when
 * cap is too small (call with cap 0 to query the length). */
c2b_status c2b_knot_alexander(const c2b_knot* k, long* coeffs, size_t cap,
                              size_t* len);
/* Human-readable form, e.g. "2t^2 - 3t + 2". Free with c2b_string_free. */
c2b_status c2b_knot_alexander_str(const c2b_knot* k, char** out);
int c2b_knot_is_fibered(const c2b_knot* k);

/* ---- admissibility and the Casson invariant ---------------------------- */

typedef struct {
    int regular;           /* always 1 for two-bridge knots */
    int is_boundary_slope; /* integer slope carried by some surface */
    int strict;            /* 0 no, 1 yes, 2 unknown */
    int alexander_ok;      /* no relevant root of unity is a root */
    int admissible;        /* alexander_ok && strict == 0 */
} c2b_admissibility;

c2b_status c2b_knot_admissibility(const c2b_knot* k, c2b_slope s,
                                  c2b_admissibility* out);

typedef struct {
    long value_num, value_den;         /* lambda(p/q) */
    long seminorm_num, seminorm_den;   /* ||p/q|| */
    long correction_num, correction_den;
    int parity;                        /* |p| mod 2 */
    c2b_admissibility diagnostics;
} c2b_casson;

/* lambda(p/q) = 1/2 ||p/q|| - E_{parity(p)}; computed unconditionally,
 * diagnostics say whether the value is certified. */
c2b_status c2b_casson_invariant(const c2b_knot* k, c2b_slope s, c2b_casson* out);

/* Same quantity through the closed double twist formulas for J(l,m). */
c2b_status c2b_casson_double_twist(long l, long m, c2b_slope s, c2b_casson* out);

/* lambda' = 1/2 ||0/1||; positive for every two-bridge knot. */
c2b_status c2b_lambda_prime(const c2b_knot* k, long* num, long* den);

/* Integer slopes excluded from the nontriviality statement (at most 2).
 * Empty for torus knots and knots with no double twist presentation. */
c2b_status c2b_exceptional_slopes(const c2b_knot* k, long* slopes, size_t cap,
                                  size_t* len);

typedef enum {
    C2B_SURGERY_POSITIVE = 0, /* lambda > 0 */
    C2B_SURGERY_MERIDIAN = 1, /* trivial 1/0 filling */
    C2B_SURGERY_EXCLUDED = 2  /* a listed exceptional integer slope */
} c2b_surgery_class;

/* Requires a hyperbolic (non-torus) knot. */
c2b_status c2b_nontriviality(const c2b_knot* k, c2b_slope s,
                             c2b_surgery_class* out);

/* ---- A-hat polynomial degrees ------------------------------------------ */

c2b_status c2b_ahat_degrees(const c2b_knot* k, long* degM, long* degL);
c2b_status c2b_double_twist_degM(long l, long m, long* degM);
/* (p,q) torus knot, p,q >= 2 coprime. */
c2b_status c2b_torus_ahat_degrees(long p, long q, long* degM, long* degL);

/* ---- reference table --------------------------------------------------- */

typedef struct c2b_table c2b_table;

/* Tab-separated: name alpha beta slope:doubled_weight;... degM_A degL_A
 * [degM_Ahat degL_Ahat]; '#' comments. */
c2b_status c2b_table_load(const char* path, c2b_table** out);
void c2b_table_free(c2b_table* t);

size_t c2b_table_row_count(const c2b_table* t);
const char* c2b_table_row_name(const c2b_table* t, size_t i);
long c2b_table_row_alpha(const c2b_table* t, size_t i);
long c2b_table_row_beta(const c2b_table* t, size_t i);

typedef struct {
    int status;  /* 0 pass, 1 documented known mismatch, 2 fail */
    int mirror;  /* surfaces matched after negating every slope */
    int surfaces_ok, degM_ok, degL_ok;
    long computed_degM, computed_degL;
    long expected_degM, expected_degL;
} c2b_row_report;

/* note (optional out) gets a description of any mismatch; free it. */
c2b_status c2b_table_verify_row(const c2b_table* t, size_t i,
                                c2b_row_report* out, char** note);

/* Recover (alpha,beta) from the row's surface data; hits get at most cap
 * entries of (alpha, beta, mirror) triples; *len gets the hit count. */
typedef struct {
    long alpha;
    long beta;
    int mirror;
} c2b_discovery_hit;

c2b_status c2b_table_discover_row(const c2b_table* t, size_t i, long max_alpha,
                                  c2b_discovery_hit* hits, size_t cap,
                                  size_t* len);

#ifdef __cplusplus
}
#endif

#endif /* CASSON2B_H */
