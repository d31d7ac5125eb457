#include "opsr/factors.hpp"

#include <algorithm>

#include "opsr/pathfind.hpp"

namespace opsr {

std::pair<double, double> reference_distances(const LotGraph& graph,
                                              const std::string& entrance,
                                              std::span<const std::string> exits) {
    double x_max = 0.0;
    double l_max = 0.0;
    for (const auto& space : graph.spaces()) {
        x_max = std::max(x_max, driving_distance(graph, entrance, space));
        l_max = std::max(l_max, walking_distance(graph, space, exits));
    }
    if (!(x_max > 0.0) || !(l_max > 0.0))
        throw LotError("degenerate lot: a reference distance maximum is zero");
    return {x_max, l_max};
}

double fuzzy_normalize(double value, double max) {
    if (!(max > 0.0)) throw LotError("fuzzy_normalize requires a positive maximum");
    if (value < 0.0 || value > max)
        throw LotError("fuzzy_normalize value outside [0, max]");
    return value / max;
}

RawFactors raw_factors(const LotGraph& graph, const OccupancyState& state,
                       const std::string& space, const std::string& entrance,
                       std::span<const std::string> exits) {
    return RawFactors{space, driving_distance(graph, entrance, space),
                      walking_distance(graph, space, exits),
                      space_difficulty(graph, state, space)};
}

FactorMatrix build_factor_matrix(const LotGraph& graph, const OccupancyState& state,
                                 const std::string& entrance,
                                 std::span<const std::string> exits) {
    const auto vacant = vacant_spaces(graph, state);
    if (vacant.empty()) throw LotError("no vacant spaces");

    FactorMatrix m;
    std::tie(m.x_max, m.l_max) = reference_distances(graph, entrance, exits);
    for (const auto& space : vacant) {
        const RawFactors raw = raw_factors(graph, state, space, entrance, exits);
        m.rows.push_back({space, fuzzy_normalize(raw.x, m.x_max),
                          fuzzy_normalize(raw.l, m.l_max), raw.s / 3.0});
    }
    return m;
}

}  // namespace opsr
