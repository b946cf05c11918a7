#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "core/apoly.hpp"
#include "core/knot.hpp"

namespace c2b {

// One row of the reference table of surface data and A-polynomial degrees.
struct GoldenRow {
    std::string name;
    long alpha;
    long beta;
    std::vector<std::pair<long, long>> surfaces; // (slope, doubled weight) per surface
    long degM_A;
    long degL_A;
    std::optional<long> degM_hat;
    std::optional<long> degL_hat;

    AhatDegrees expected_hat() const {
        return AhatDegrees{degM_hat.value_or(degM_A), degL_hat.value_or(degL_A)};
    }
};

// Tab-separated rows; '#' starts a comment; blank lines skipped.
// Columns: name alpha beta surfaces degM_A degL_A [degM_Ahat degL_Ahat]
// where surfaces is "slope:doubled_weight;...".
std::vector<GoldenRow> parse_table(std::istream& in);
std::vector<GoldenRow> parse_table_file(const std::string& path);

enum class RowStatus { Pass, KnownMismatch, Fail };

struct RowReport {
    std::string name;
    RowStatus status;
    bool mirror_match;  // surfaces matched only after negating every slope
    bool surfaces_ok;
    bool degM_ok;
    bool degL_ok;
    AhatDegrees computed;
    AhatDegrees expected;
    std::string note;
};

RowReport verify_row(const GoldenRow& row);

struct TableReport {
    std::vector<RowReport> rows;
    int passed = 0;
    int known_mismatches = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

TableReport verify_table(const std::vector<GoldenRow>& rows);

struct DiscoveryHit {
    long alpha;
    long beta;
    bool mirror; // matched with all slopes negated
};

// Knots whose surface multiset matches the row, searching alpha = 2*degL + 1
// first and falling back to all odd alpha <= max_alpha when that fails.
std::vector<DiscoveryHit> discover_row(const GoldenRow& row, long max_alpha = 0);

} // namespace c2b
