#include "opsr/pathfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace opsr {
namespace {

double heuristic(const LotGraph& g, const std::string& from, const std::string& to) {
    const Node& a = g.node(from);
    const Node& b = g.node(to);
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct OpenEntry {
    double f;
    double g;
    std::string id;
};

// OPEN ordering: smallest f first; on equal f prefer larger g, then the
// lexicographically smaller id.
struct OpenCompare {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g < b.g;
        return a.id > b.id;
    }
};

double astar_length(const LotGraph& graph, const std::string& start, const std::string& goal) {
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenCompare> open;
    std::map<std::string, double> best_g;
    std::set<std::string> closed;

    open.push({heuristic(graph, start, goal), 0.0, start});
    best_g[start] = 0.0;

    while (!open.empty()) {
        const OpenEntry cur = open.top();
        open.pop();
        if (closed.contains(cur.id)) continue;
        closed.insert(cur.id);
        if (cur.id == goal) return cur.g;
        for (const auto& adj : graph.adjacent(cur.id)) {
            if (closed.contains(adj.to)) continue;
            const double g = cur.g + adj.length;
            auto it = best_g.find(adj.to);
            if (it == best_g.end() || g < it->second) {
                best_g[adj.to] = g;
                open.push({g + heuristic(graph, adj.to, goal), g, adj.to});
            }
        }
    }
    throw LotError("no path from '" + start + "' to '" + goal + "'");
}

// Exact distance-to-goal for every reachable node (uniform-cost sweep),
// used to reconstruct the canonical minimum path.
std::map<std::string, double> distances_from(const LotGraph& graph, const std::string& source) {
    std::map<std::string, double> dist;
    using Item = std::pair<double, std::string>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    open.push({0.0, source});
    dist[source] = 0.0;
    while (!open.empty()) {
        auto [d, id] = open.top();
        open.pop();
        if (d > dist.at(id)) continue;
        for (const auto& adj : graph.adjacent(id)) {
            const double nd = d + adj.length;
            auto it = dist.find(adj.to);
            if (it == dist.end() || nd < it->second) {
                dist[adj.to] = nd;
                open.push({nd, adj.to});
            }
        }
    }
    return dist;
}

}  // namespace

Path astar(const LotGraph& graph, const std::string& start, const std::string& goal) {
    graph.node(start);
    graph.node(goal);
    if (start == goal) return Path{{start}, 0.0};

    const double shortest = astar_length(graph, start, goal);
    const auto to_goal = distances_from(graph, goal);
    const double eps = 1e-9 * std::max(1.0, shortest);

    // Greedy walk over the shortest-path DAG; picking the smallest admissible
    // neighbor id at every step yields the lexicographically smallest
    // minimum-length node sequence. Edge lengths are positive, so the
    // remaining distance strictly decreases and the walk terminates.
    Path path;
    path.nodes.push_back(start);
    std::string cur = start;
    while (cur != goal) {
        const double remaining = to_goal.at(cur);
        const LotGraph::Adjacent* next = nullptr;
        for (const auto& adj : graph.adjacent(cur)) {  // sorted by id
            auto it = to_goal.find(adj.to);
            if (it == to_goal.end()) continue;
            if (std::abs(adj.length + it->second - remaining) <= eps) {
                next = &adj;
                break;
            }
        }
        if (next == nullptr) throw LotError("path reconstruction failed at '" + cur + "'");
        path.length += next->length;
        path.nodes.push_back(next->to);
        cur = next->to;
    }
    return path;
}

double driving_distance(const LotGraph& graph, const std::string& entrance,
                        const std::string& space) {
    if (graph.node(entrance).kind != NodeKind::Entrance)
        throw LotError("node '" + entrance + "' is not an entrance");
    if (graph.node(space).kind != NodeKind::Space)
        throw LotError("node '" + space + "' is not a space");
    return astar(graph, entrance, space).length;
}

double walking_distance(const LotGraph& graph, const std::string& space,
                        std::span<const std::string> exits) {
    if (graph.node(space).kind != NodeKind::Space)
        throw LotError("node '" + space + "' is not a space");
    if (exits.empty()) throw LotError("walking_distance requires at least one exit");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& exit_id : exits) {
        if (graph.node(exit_id).kind != NodeKind::Exit)
            throw LotError("node '" + exit_id + "' is not an exit");
        best = std::min(best, astar(graph, space, exit_id).length);
    }
    return best;
}

}  // namespace opsr
