#pragma once

// Independent reference implementations used to cross-check the library.
// Nothing here may call into opsr's pathfind/entropy/recommend internals
// beyond reading graphs and occupancy.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opsr/entropy_weights.hpp"
#include "opsr/evaluate.hpp"
#include "opsr/lot_model.hpp"

namespace opsr::test {

/// Textbook Dijkstra from one source, distances to every reachable node.
std::map<std::string, double> oracle_dijkstra(const LotGraph& graph, const std::string& source);

/// Breadth-first reachability from a source node.
std::vector<std::string> oracle_bfs(const LotGraph& graph, const std::string& source);

struct OracleWeights {
    std::array<double, 3> e;
    std::array<double, 3> h;
    std::array<double, 3> w;
    bool fallback;
};

/// Direct re-derivation of the entropy weighting chain over raw rows.
OracleWeights oracle_entropy(const std::vector<std::array<double, 3>>& rows);

struct OracleChoice {
    std::string space;
    double h;
    double drive_s;
    double maneuver_s;
    double walk_s;
    double total_s;
};

/// Exhaustive pipeline oracle: recompute X, L, S for every vacant space from
/// Dijkstra distances, fuzzy-normalize, weight (entropy or fixed), take the
/// argmin-H space with lexicographic tie-break, and score its duration.
OracleChoice oracle_choice(const LotGraph& graph, const OccupancyState& state,
                           const std::optional<WeightVector>& fixed_weights,
                           const DurationModel& model);

}  // namespace opsr::test
