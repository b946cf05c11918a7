#pragma once

#include <vector>

#include "core/knot.hpp"
#include "core/rational.hpp"
#include "core/surfaces.hpp"

namespace c2b {

// Aggregated Culler-Shalen seminorm of a two-bridge knot:
//   ||p/q|| = 1/2 * sum_N doubled_weight(N) * |p - N q|.
class Seminorm {
public:
    explicit Seminorm(const TwoBridgeKnot& k);

    const TwoBridgeKnot& knot() const { return knot_; }
    // Aggregated (slope, doubled weight), ascending by slope; the Seifert
    // slope stays listed even when its corrected weight is 0.
    const std::vector<std::pair<long, long>>& terms() const { return terms_; }

    // Evaluate on a raw lattice point (p,q), not necessarily coprime.
    Rational eval_raw(long p, long q) const;
    Rational eval(const Slope& s) const { return eval_raw(s.p, s.q); }

    // A genuine norm iff at least two distinct slopes carry positive weight.
    bool is_norm() const;

private:
    TwoBridgeKnot knot_;
    std::vector<std::pair<long, long>> terms_;
};

} // namespace c2b
