#pragma once

#include <span>
#include <string>
#include <vector>

#include "opsr/lot_model.hpp"

namespace opsr {

struct Path {
    std::vector<std::string> nodes;
    double length = 0.0;
};

/// A* shortest path with a straight-line heuristic. Among equal-length
/// paths the lexicographically smallest node-id sequence is returned.
/// start == goal yields the single-node path of length 0.
Path astar(const LotGraph& graph, const std::string& start, const std::string& goal);

/// Driving distance X: shortest path length from an entrance to a space.
double driving_distance(const LotGraph& graph, const std::string& entrance,
                        const std::string& space);

/// Walking distance L: minimum over exits of the shortest path length
/// from the space. Pedestrians use the same graph as vehicles.
double walking_distance(const LotGraph& graph, const std::string& space,
                        std::span<const std::string> exits);

}  // namespace opsr
