#include "opsr/recommend.hpp"

namespace opsr {

double composite_index(const FactorRow& row, const WeightVector& w) {
    if (w.w1 < 0.0 || w.w2 < 0.0 || w.w3 < 0.0)
        throw LotError("composite index requires nonnegative weights");
    if (!(w.w1 > 0.0 || w.w2 > 0.0 || w.w3 > 0.0))
        throw LotError("composite index requires a nonzero weight vector");
    return w.w1 * row.x + w.w2 * row.l + w.w3 * row.s;
}

Recommendation recommend(const LotGraph& graph, const OccupancyState& state,
                         const std::string& entrance, std::span<const std::string> exits,
                         const std::optional<WeightVector>& fixed_weights) {
    const auto vacant = vacant_spaces(graph, state);
    if (vacant.empty()) throw LotFullError("lot is full: no vacant space to recommend");

    const FactorMatrix matrix = build_factor_matrix(graph, state, entrance, exits);

    Recommendation rec;
    if (vacant.size() == 1) {
        // Single candidate: entropy weighting is undefined, recommend directly.
        rec.weights_used =
            fixed_weights.value_or(WeightVector{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
        rec.fallback_flag = true;
    } else if (fixed_weights.has_value()) {
        rec.weights_used = *fixed_weights;
    } else {
        EntropyReport report = entropy_weights(matrix);
        rec.weights_used = report.w;
        rec.fallback_flag = report.fallback;
        rec.entropy = std::move(report);
    }

    for (const auto& row : matrix.rows)
        rec.per_space_indices.emplace_back(row.space, composite_index(row, rec.weights_used));

    rec.space = rec.per_space_indices.front().first;
    rec.h_value = rec.per_space_indices.front().second;
    // H values within 1e-12 count as tied so summation-order noise cannot
    // override the lexicographic tie-break.
    for (const auto& [space, h] : rec.per_space_indices) {
        if (h < rec.h_value - 1e-12) {
            rec.space = space;
            rec.h_value = h;
        }
    }
    return rec;
}

}  // namespace opsr
