// Command line front end for the casson2b library. Talks to the C API only.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "casson2b.h"

using json = nlohmann::ordered_json;

namespace {

// Usage/parse problems exit 1, verification failures 2, uncertified values 3.
enum ExitCode { EXIT_OK = 0, EXIT_BADINPUT = 1, EXIT_VERIFY = 2, EXIT_UNCERTIFIED = 3 };

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) {
    throw CliError{code, msg};
}

c2b_knot* parse_knot_or_die(const std::string& text) {
    c2b_knot* k = nullptr;
    c2b_status st = c2b_knot_parse(text.c_str(), &k);
    if (st != C2B_OK)
        die(EXIT_BADINPUT, c2b_last_error());
    return k;
}

c2b_slope parse_slope_or_die(const std::string& text) {
    c2b_slope s;
    if (c2b_slope_parse(text.c_str(), &s) != C2B_OK)
        die(EXIT_BADINPUT, c2b_last_error());
    return s;
}

void check(c2b_status st) {
    if (st != C2B_OK)
        die(EXIT_BADINPUT, c2b_last_error());
}

std::string knot_name(const c2b_knot* k) {
    return "K(" + std::to_string(c2b_knot_alpha(k)) + "," +
           std::to_string(c2b_knot_beta(k)) + ")";
}

std::string rat_str(long num, long den) {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

json rat_json(long num, long den) { return json{{"num", num}, {"den", den}}; }

json admissibility_json(const c2b_admissibility& a) {
    const char* strict = a.strict == 0 ? "no" : a.strict == 1 ? "yes" : "unknown";
    return json{{"regular", a.regular != 0},
                {"is_boundary_slope", a.is_boundary_slope != 0},
                {"strict", strict},
                {"alexander_ok", a.alexander_ok != 0},
                {"admissible", a.admissible != 0}};
}

json seminorm_terms_json(const c2b_knot* k) {
    c2b_seminorm* n = nullptr;
    check(c2b_seminorm_create(k, &n));
    json terms = json::array();
    for (size_t i = 0; i < c2b_seminorm_term_count(n); i++)
        terms.push_back(json{{"slope", c2b_seminorm_term_slope(n, i)},
                             {"doubled_weight", c2b_seminorm_term_weight(n, i)}});
    c2b_seminorm_free(n);
    return terms;
}

std::vector<long> exceptional(const c2b_knot* k) {
    long buf[4];
    size_t len = 0;
    check(c2b_exceptional_slopes(k, buf, 4, &len));
    return std::vector<long>(buf, buf + len);
}

// ---- info ----

int cmd_info(const std::string& knot_text, bool as_json) {
    c2b_knot* k = parse_knot_or_die(knot_text);
    bool torus = c2b_knot_is_torus(k) != 0;
    char* alex = nullptr;
    check(c2b_knot_alexander_str(k, &alex));
    long lp_num, lp_den, degM, degL;
    check(c2b_lambda_prime(k, &lp_num, &lp_den));
    check(c2b_ahat_degrees(k, &degM, &degL));
    auto exc = exceptional(k);
    c2b_knot* mir = nullptr;
    check(c2b_knot_mirror(k, &mir));
    c2b_seminorm* norm = nullptr;
    check(c2b_seminorm_create(k, &norm));

    if (as_json) {
        json out;
        out["knot"] = {{"alpha", c2b_knot_alpha(k)}, {"beta", c2b_knot_beta(k)}};
        out["class"] = torus ? "torus" : "hyperbolic";
        out["mirror"] = {{"alpha", c2b_knot_alpha(mir)}, {"beta", c2b_knot_beta(mir)}};
        out["alexander"] = alex;
        out["fibered"] = c2b_knot_is_fibered(k) != 0;
        out["lambda_prime"] = rat_json(lp_num, lp_den);
        out["deg_M"] = degM;
        out["deg_L"] = degL;
        out["seminorm_terms"] = seminorm_terms_json(k);
        out["is_norm"] = c2b_seminorm_is_norm(norm) != 0;
        out["exceptional_slopes"] = exc;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "knot: " << knot_name(k) << "\n";
        std::cout << "class: " << (torus ? "torus" : "hyperbolic") << "\n";
        std::cout << "mirror: " << knot_name(mir) << "\n";
        std::cout << "alexander: " << alex << "\n";
        std::cout << "fibered: " << (c2b_knot_is_fibered(k) ? "yes" : "no") << "\n";
        std::cout << "lambda_prime: " << rat_str(lp_num, lp_den) << "\n";
        std::cout << "deg_M: " << degM << "\n";
        std::cout << "deg_L: " << degL << "\n";
        std::cout << "seminorm_terms:";
        for (size_t i = 0; i < c2b_seminorm_term_count(norm); i++)
            std::cout << " " << c2b_seminorm_term_slope(norm, i) << ":"
                      << c2b_seminorm_term_weight(norm, i);
        std::cout << "\n";
        std::cout << "is_norm: " << (c2b_seminorm_is_norm(norm) ? "yes" : "no") << "\n";
        std::cout << "exceptional_slopes:";
        if (exc.empty())
            std::cout << " none";
        for (long s : exc)
            std::cout << " " << s;
        std::cout << "\n";
    }
    c2b_seminorm_free(norm);
    c2b_knot_free(mir);
    c2b_string_free(alex);
    c2b_knot_free(k);
    return EXIT_OK;
}

// ---- surfaces ----

// Effective weight = doubled/2, printed exactly as an integer or "n/2".
std::string eff_weight_str(long doubled) {
    if (doubled % 2 == 0)
        return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string expansion_str(const c2b_surfaces* s, size_t i, const char* sep) {
    std::string out;
    for (size_t j = 0; j < c2b_surface_expansion_len(s, i); j++) {
        if (j)
            out += sep;
        out += std::to_string(c2b_surface_expansion_entry(s, i, j));
    }
    return out;
}

int cmd_surfaces(const std::string& knot_text, bool as_json, bool as_csv) {
    c2b_knot* k = parse_knot_or_die(knot_text);
    c2b_surfaces* s = nullptr;
    check(c2b_knot_surfaces(k, &s));
    size_t n = c2b_surfaces_count(s);
    if (as_json) {
        json out;
        out["knot"] = {{"alpha", c2b_knot_alpha(k)}, {"beta", c2b_knot_beta(k)}};
        json arr = json::array();
        for (size_t i = 0; i < n; i++) {
            json exp = json::array();
            for (size_t j = 0; j < c2b_surface_expansion_len(s, i); j++)
                exp.push_back(c2b_surface_expansion_entry(s, i, j));
            arr.push_back(json{{"slope", c2b_surface_slope(s, i)},
                               {"doubled_weight", c2b_surface_doubled_weight(s, i)},
                               {"is_seifert", c2b_surface_is_seifert(s, i) != 0},
                               {"expansion", exp}});
        }
        out["surfaces"] = arr;
        std::cout << out.dump(2) << "\n";
    } else if (as_csv) {
        std::cout << "slope,weight,doubled_weight,is_seifert,expansion\n";
        for (size_t i = 0; i < n; i++)
            std::cout << c2b_surface_slope(s, i) << ","
                      << eff_weight_str(c2b_surface_doubled_weight(s, i)) << ","
                      << c2b_surface_doubled_weight(s, i) << ","
                      << (c2b_surface_is_seifert(s, i) ? "yes" : "no") << ",\""
                      << expansion_str(s, i, " ") << "\"\n";
    } else {
        std::cout << "# " << knot_name(k) << ": slope weight seifert expansion\n";
        for (size_t i = 0; i < n; i++)
            std::cout << c2b_surface_slope(s, i) << " "
                      << eff_weight_str(c2b_surface_doubled_weight(s, i)) << " "
                      << (c2b_surface_is_seifert(s, i) ? "yes" : "no") << " ["
                      << expansion_str(s, i, ",") << "]\n";
    }
    c2b_surfaces_free(s);
    c2b_knot_free(k);
    return EXIT_OK;
}

// ---- casson ----

int cmd_casson(const std::string& knot_text, const std::string& slope_text,
               bool as_json, bool force) {
    c2b_knot* k = parse_knot_or_die(knot_text);
    c2b_slope s = parse_slope_or_die(slope_text);
    c2b_casson c;
    check(c2b_casson_invariant(k, s, &c));
    bool certified = c.diagnostics.admissible != 0;
    if (!certified && !force) {
        std::cerr << "surgery " << s.p << "/" << s.q << " on "
                  << knot_name(k) << " is not admissible";
        if (!c.diagnostics.alexander_ok)
            std::cerr << " (Alexander polynomial has a relevant root of unity)";
        if (c.diagnostics.strict == 1)
            std::cerr << " (strict boundary slope)";
        std::cerr << "; value not certified, rerun with --force\n";
        c2b_knot_free(k);
        return EXIT_UNCERTIFIED;
    }
    if (as_json) {
        json out;
        out["knot"] = {{"alpha", c2b_knot_alpha(k)}, {"beta", c2b_knot_beta(k)}};
        out["slope"] = {{"p", s.p}, {"q", s.q}};
        out["seminorm_terms"] = seminorm_terms_json(k);
        out["casson"] = {{"value", rat_json(c.value_num, c.value_den)},
                         {"seminorm", rat_json(c.seminorm_num, c.seminorm_den)},
                         {"correction", rat_json(c.correction_num, c.correction_den)},
                         {"parity", c.parity},
                         {"admissibility", admissibility_json(c.diagnostics)},
                         {"certified", certified}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "knot: " << knot_name(k) << "\n";
        std::cout << "slope: " << s.p << "/" << s.q << "\n";
        std::cout << "seminorm: " << rat_str(c.seminorm_num, c.seminorm_den) << "\n";
        std::cout << "correction: " << rat_str(c.correction_num, c.correction_den) << "\n";
        std::cout << "lambda: " << rat_str(c.value_num, c.value_den) << "\n";
        std::cout << "certified: " << (certified ? "yes" : "no") << "\n";
    }
    c2b_knot_free(k);
    return EXIT_OK;
}

// ---- verify-table ----

int cmd_verify(const std::string& path, bool discover, long max_alpha, bool as_json) {
    c2b_table* t = nullptr;
    c2b_status st = c2b_table_load(path.c_str(), &t);
    if (st != C2B_OK)
        die(EXIT_BADINPUT, c2b_last_error());
    size_t n = c2b_table_row_count(t);
    int passed = 0, known = 0, failed = 0;
    json jrows = json::array();
    for (size_t i = 0; i < n; i++) {
        c2b_row_report r;
        char* note = nullptr;
        check(c2b_table_verify_row(t, i, &r, &note));
        std::string name = c2b_table_row_name(t, i);
        std::string knot = "K(" + std::to_string(c2b_table_row_alpha(t, i)) + "," +
                           std::to_string(c2b_table_row_beta(t, i)) + ")";
        const char* status = r.status == 0 ? "PASS"
                           : r.status == 1 ? "KNOWN-MISMATCH" : "FAIL";
        if (r.status == 0) passed++;
        else if (r.status == 1) known++;
        else failed++;

        std::string disc_text;
        json disc_json = json::array();
        bool disc_ok = true;
        if (discover) {
            c2b_discovery_hit hits[64];
            size_t len = 0;
            check(c2b_table_discover_row(t, i, max_alpha, hits, 64, &len));
            bool declared_found = false;
            for (size_t j = 0; j < len; j++) {
                disc_text += (j ? " " : "") + std::string("K(") +
                             std::to_string(hits[j].alpha) + "," +
                             std::to_string(hits[j].beta) + ")" +
                             (hits[j].mirror ? "*" : "");
                disc_json.push_back(json{{"alpha", hits[j].alpha},
                                         {"beta", hits[j].beta},
                                         {"mirror", hits[j].mirror != 0}});
                if (hits[j].alpha == c2b_table_row_alpha(t, i) &&
                    hits[j].beta == c2b_table_row_beta(t, i))
                    declared_found = true;
            }
            if (len == 0 || !declared_found) {
                disc_ok = false;
                if (r.status != 2) {
                    failed++;
                    if (r.status == 0) passed--; else known--;
                }
            }
        }

        if (as_json) {
            json jr{{"name", name},
                    {"alpha", c2b_table_row_alpha(t, i)},
                    {"beta", c2b_table_row_beta(t, i)},
                    {"status", status},
                    {"mirror", r.mirror != 0},
                    {"surfaces_ok", r.surfaces_ok != 0},
                    {"degM_ok", r.degM_ok != 0},
                    {"degL_ok", r.degL_ok != 0},
                    {"computed", {{"deg_M", r.computed_degM}, {"deg_L", r.computed_degL}}},
                    {"expected", {{"deg_M", r.expected_degM}, {"deg_L", r.expected_degL}}}};
            if (note && *note)
                jr["note"] = note;
            if (discover) {
                jr["discovered"] = disc_json;
                jr["discovery_ok"] = disc_ok;
            }
            jrows.push_back(std::move(jr));
        } else {
            std::cout << "row " << name << " " << knot << ": " << status;
            if (r.mirror)
                std::cout << " (mirror)";
            if (note && *note)
                std::cout << " -- " << note;
            if (discover) {
                std::cout << " discovered: " << (disc_text.empty() ? "none" : disc_text);
                if (!disc_ok)
                    std::cout << " [DISCOVERY FAILED]";
            }
            std::cout << "\n";
        }
        c2b_string_free(note);
    }
    if (as_json) {
        json out{{"rows", jrows},
                 {"passed", passed},
                 {"known_mismatches", known},
                 {"failed", failed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << n << " rows: " << passed << " passed, " << known
                  << " known mismatches, " << failed << " failed\n";
    }
    c2b_table_free(t);
    return failed == 0 ? EXIT_OK : EXIT_VERIFY;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact surgery invariants of two-bridge knots"};
    app.require_subcommand(1);

    std::string knot_text, slope_text, table_path;
    bool as_json = false, as_csv = false, force = false, discover = false;
    long max_alpha = 0;

    auto* info = app.add_subcommand("info", "Summary of a knot's invariants");
    info->add_option("knot", knot_text, "K(alpha,beta) or J(l,m)")->required();
    info->add_flag("--json", as_json, "JSON output");

    auto* surf = app.add_subcommand("surfaces", "Incompressible surface data");
    surf->add_option("knot", knot_text, "K(alpha,beta) or J(l,m)")->required();
    surf->add_flag("--json", as_json, "JSON output");
    surf->add_flag("--csv", as_csv, "CSV output");

    auto* cas = app.add_subcommand("casson", "Casson invariant of a p/q surgery");
    cas->add_option("knot", knot_text, "K(alpha,beta) or J(l,m)")->required();
    cas->add_option("slope", slope_text, "surgery slope p/q")->required();
    cas->add_flag("--json", as_json, "JSON output");
    cas->add_flag("--force", force, "report uncertified values too");

    auto* ver = app.add_subcommand("verify-table", "Check a reference table");
    ver->add_option("table", table_path, "TSV table path")->required();
    ver->add_flag("--json", as_json, "JSON output");
    ver->add_flag("--discover", discover, "recover (alpha,beta) from surface data");
    ver->add_option("--max-alpha", max_alpha, "discovery fallback search bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? EXIT_BADINPUT : EXIT_OK;
    }

    try {
        if (info->parsed())
            return cmd_info(knot_text, as_json);
        if (surf->parsed())
            return cmd_surfaces(knot_text, as_json, as_csv);
        if (cas->parsed())
            return cmd_casson(knot_text, slope_text, as_json, force);
        if (ver->parsed())
            return cmd_verify(table_path, discover, max_alpha, as_json);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return EXIT_BADINPUT;
}
