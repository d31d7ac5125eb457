#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opsr/lot_model.hpp"

namespace opsr {

struct RawFactors {
    std::string space;
    double x = 0.0;  // driving distance, m
    double l = 0.0;  // walking distance, m
    int s = 1;       // difficulty, {1,2,3}
};

struct FactorRow {
    std::string space;
    double x = 0.0;  // each normalized to [0,1]
    double l = 0.0;
    double s = 0.0;
};

struct FactorMatrix {
    std::vector<FactorRow> rows;  // canonical (lexicographic) space order
    double x_max = 0.0;
    double l_max = 0.0;
};

/// Reference maxima over ALL spaces, vacant or not, so normalization does
/// not shift as the lot fills up. Throws on a degenerate lot where a
/// maximum is zero.
std::pair<double, double> reference_distances(const LotGraph& graph,
                                              const std::string& entrance,
                                              std::span<const std::string> exits);

/// Linear ascending membership: value / max, peaking at 1.
double fuzzy_normalize(double value, double max);

RawFactors raw_factors(const LotGraph& graph, const OccupancyState& state,
                       const std::string& space, const std::string& entrance,
                       std::span<const std::string> exits);

/// One normalized row per vacant space. Difficulty is normalized by its
/// maximum possible value 3.
FactorMatrix build_factor_matrix(const LotGraph& graph, const OccupancyState& state,
                                 const std::string& entrance,
                                 std::span<const std::string> exits);

}  // namespace opsr
