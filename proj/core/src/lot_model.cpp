#include "opsr/lot_model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace opsr {
namespace {

using nlohmann::json;

NodeKind parse_kind(const std::string& s) {
    if (s == "entrance") return NodeKind::Entrance;
    if (s == "exit") return NodeKind::Exit;
    if (s == "intersection") return NodeKind::Intersection;
    if (s == "space") return NodeKind::Space;
    throw LotError("unknown node kind '" + s + "'");
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end()) {
            throw LotError("unknown field '" + key + "' in " + where);
        }
    }
}

double euclid(const Node& a, const Node& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Entrance: return "entrance";
        case NodeKind::Exit: return "exit";
        case NodeKind::Intersection: return "intersection";
        case NodeKind::Space: return "space";
    }
    return "?";
}

bool OccupancyState::is_occupied(const std::string& space) const {
    auto it = occupied.find(space);
    if (it == occupied.end()) throw LotError("unknown space id '" + space + "'");
    return it->second;
}

LotGraph LotGraph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LotError("cannot open lot file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw LotError(std::string("lot file parse failure: ") + e.what());
    }
    return load(doc);
}

LotGraph LotGraph::load(const json& doc) {
    if (!doc.is_object()) throw LotError("layout document must be a single object");
    reject_unknown_keys(doc, {"nodes", "edges", "neighbors", "occupied"}, "layout document");
    if (!doc.contains("nodes") || !doc.contains("edges"))
        throw LotError("layout document requires 'nodes' and 'edges'");

    LotGraph g;
    for (const auto& n : doc.at("nodes")) {
        reject_unknown_keys(n, {"id", "kind", "x", "y"}, "node");
        Node node{n.at("id").get<std::string>(), parse_kind(n.at("kind").get<std::string>()),
                  n.at("x").get<double>(), n.at("y").get<double>()};
        if (!std::isfinite(node.x) || !std::isfinite(node.y))
            throw LotError("non-finite coordinate on node '" + node.id + "'");
        g.nodes_.push_back(std::move(node));
    }
    std::sort(g.nodes_.begin(), g.nodes_.end(),
              [](const Node& a, const Node& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
        const Node& n = g.nodes_[i];
        if (!g.index_.emplace(n.id, i).second)
            throw LotError("duplicate node id '" + n.id + "'");
        g.adjacency_.emplace(n.id, std::vector<Adjacent>{});
        switch (n.kind) {
            case NodeKind::Entrance: g.entrances_.push_back(n.id); break;
            case NodeKind::Exit: g.exits_.push_back(n.id); break;
            case NodeKind::Space:
                g.spaces_.push_back(n.id);
                g.space_neighbors_.emplace(n.id, std::vector<std::string>{});
                break;
            case NodeKind::Intersection: break;
        }
    }

    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (const auto& e : doc.at("edges")) {
        reject_unknown_keys(e, {"a", "b", "length"}, "edge");
        Edge edge{e.at("a").get<std::string>(), e.at("b").get<std::string>(), 0.0};
        if (!g.has_node(edge.a) || !g.has_node(edge.b))
            throw LotError("edge (" + edge.a + ", " + edge.b + ") references a missing node");
        if (edge.a == edge.b) throw LotError("self-loop edge on '" + edge.a + "'");
        auto key = std::minmax(edge.a, edge.b);
        if (!seen_pairs.insert(key).second)
            throw LotError("duplicate edge (" + edge.a + ", " + edge.b + ")");
        const double straight = euclid(g.node(edge.a), g.node(edge.b));
        edge.length = e.contains("length") ? e.at("length").get<double>() : straight;
        if (!(edge.length > 0.0))
            throw LotError("edge (" + edge.a + ", " + edge.b + ") must have positive length");
        if (edge.length < straight - 1e-9)
            throw LotError("edge (" + edge.a + ", " + edge.b + ") declared length " +
                           std::to_string(edge.length) + " is shorter than the straight-line " +
                           std::to_string(straight));
        g.adjacency_[edge.a].push_back({edge.b, edge.length});
        g.adjacency_[edge.b].push_back({edge.a, edge.length});
        g.edges_.push_back(std::move(edge));
    }
    for (auto& [_, adj] : g.adjacency_)
        std::sort(adj.begin(), adj.end(),
                  [](const Adjacent& a, const Adjacent& b) { return a.to < b.to; });

    if (doc.contains("neighbors")) {
        for (const auto& pair : doc.at("neighbors")) {
            if (!pair.is_array() || pair.size() != 2)
                throw LotError("neighbor entries must be [space, space] pairs");
            const auto a = pair[0].get<std::string>();
            const auto b = pair[1].get<std::string>();
            for (const auto& id : {a, b}) {
                if (!g.has_node(id) || g.node(id).kind != NodeKind::Space)
                    throw LotError("neighbor pair references non-space '" + id + "'");
            }
            if (a == b) throw LotError("space '" + a + "' declared neighbor of itself");
            g.space_neighbors_[a].push_back(b);
            g.space_neighbors_[b].push_back(a);
        }
        for (const auto& [space, nbrs] : g.space_neighbors_) {
            if (nbrs.size() > 2)
                throw LotError("space '" + space + "' has more than 2 declared neighbors");
        }
    }

    if (doc.contains("occupied")) {
        for (const auto& id_json : doc.at("occupied")) {
            const auto id = id_json.get<std::string>();
            if (!g.has_node(id) || g.node(id).kind != NodeKind::Space)
                throw LotError("occupied list references non-space '" + id + "'");
            g.initially_occupied_.push_back(id);
        }
    }

    g.validate();
    return g;
}

void LotGraph::validate() const {
    if (entrances_.empty()) throw LotError("lot has no entrance");
    if (exits_.empty()) throw LotError("lot has no exit");
    if (spaces_.empty()) throw LotError("lot has no parking space");

    // Every space, entrance, and exit must sit in one connected component.
    std::set<std::string> reached;
    std::deque<std::string> frontier{entrances_.front()};
    reached.insert(entrances_.front());
    while (!frontier.empty()) {
        const auto cur = frontier.front();
        frontier.pop_front();
        for (const auto& adj : adjacency_.at(cur)) {
            if (reached.insert(adj.to).second) frontier.push_back(adj.to);
        }
    }
    for (const Node& n : nodes_) {
        if (!reached.contains(n.id))
            throw LotError("driving network is disconnected: '" + n.id + "' is unreachable");
    }
}

bool LotGraph::has_node(const std::string& id) const { return index_.contains(id); }

const Node& LotGraph::node(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw LotError("unknown node id '" + id + "'");
    return nodes_[it->second];
}

const std::vector<LotGraph::Adjacent>& LotGraph::adjacent(const std::string& id) const {
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) throw LotError("unknown node id '" + id + "'");
    return it->second;
}

const std::vector<std::string>& LotGraph::space_neighbors(const std::string& space) const {
    auto it = space_neighbors_.find(space);
    if (it == space_neighbors_.end()) throw LotError("unknown space id '" + space + "'");
    return it->second;
}

OccupancyState LotGraph::all_vacant() const {
    OccupancyState state;
    for (const auto& s : spaces_) state.occupied[s] = false;
    return state;
}

OccupancyState LotGraph::initial_state() const {
    OccupancyState state = all_vacant();
    for (const auto& s : initially_occupied_) state.occupied[s] = true;
    return state;
}

OccupancyState set_occupancy(const LotGraph& graph, OccupancyState state,
                             const std::string& space, bool occupied) {
    const Node& n = graph.node(space);
    if (n.kind != NodeKind::Space)
        throw LotError("node '" + space + "' is a " + std::string(to_string(n.kind)) +
                       ", not a space");
    state.occupied.at(space) = occupied;
    return state;
}

std::vector<std::string> vacant_spaces(const LotGraph& graph, const OccupancyState& state) {
    std::vector<std::string> result;
    for (const auto& s : graph.spaces()) {
        if (!state.is_occupied(s)) result.push_back(s);
    }
    return result;  // graph.spaces() is already sorted
}

int space_difficulty(const LotGraph& graph, const OccupancyState& state,
                     const std::string& space) {
    int occupied_sides = 0;
    for (const auto& nbr : graph.space_neighbors(space)) {
        if (state.is_occupied(nbr)) ++occupied_sides;
    }
    return 1 + occupied_sides;
}

}  // namespace opsr
