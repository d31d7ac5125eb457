#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opsr/entropy_weights.hpp"
#include "opsr/factors.hpp"

namespace opsr {

/// Raised when there is no vacant space to recommend.
class LotFullError : public LotError {
public:
    using LotError::LotError;
};

struct Recommendation {
    std::string space;
    double h_value = 0.0;
    std::vector<std::pair<std::string, double>> per_space_indices;  // canonical order
    WeightVector weights_used;
    bool fallback_flag = false;
    std::optional<EntropyReport> entropy;  // present in entropy mode with >= 2 candidates
};

/// Composite index H = w1*x + w2*l + w3*s over a normalized row.
/// Throws on an all-zero weight vector.
double composite_index(const FactorRow& row, const WeightVector& w);

/// Full pipeline: factor matrix, weights (entropy mode when fixed_weights
/// is empty), argmin H with lexicographic tie-break. A single vacant space
/// is returned directly with the fallback flag set. Throws LotFullError
/// when nothing is vacant.
Recommendation recommend(const LotGraph& graph, const OccupancyState& state,
                         const std::string& entrance, std::span<const std::string> exits,
                         const std::optional<WeightVector>& fixed_weights = std::nullopt);

}  // namespace opsr
