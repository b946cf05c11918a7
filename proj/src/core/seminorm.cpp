#include "core/seminorm.hpp"

#include <map>

namespace c2b {

Seminorm::Seminorm(const TwoBridgeKnot& k) : knot_(k) {
    std::map<long, long> acc;
    for (const auto& s : all_surfaces(k))
        acc[s.slope] += s.doubled_weight;
    long total = 0;
    for (const auto& [slope, w] : acc) {
        total += w;
        terms_.emplace_back(slope, w); // zero-weight slopes kept (Seifert at 0)
    }
    if (total != k.alpha() - 1)
        throw InternalError("seminorm weights must sum to alpha - 1");
}

Rational Seminorm::eval_raw(long p, long q) const {
    Int acc = 0;
    for (const auto& [slope, w] : terms_)
        acc += Int(w) * abs(Int(p) - Int(slope) * Int(q));
    return make_rational(acc, Int(2));
}

bool Seminorm::is_norm() const {
    int positive = 0;
    for (const auto& [slope, w] : terms_)
        if (w > 0)
            positive++;
    return positive >= 2;
}

} // namespace c2b
