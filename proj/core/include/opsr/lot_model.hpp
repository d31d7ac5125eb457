#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace opsr {

/// Raised for any invalid lot document, unknown id, or bad query.
class LotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class NodeKind { Entrance, Exit, Intersection, Space };

const char* to_string(NodeKind kind);

struct Node {
    std::string id;
    NodeKind kind;
    double x = 0.0;
    double y = 0.0;
};

struct Edge {
    std::string a;
    std::string b;
    double length = 0.0;
};

/// Per-space occupied flags layered over a LotGraph. Keys are exactly the
/// Space ids of the lot the state was created for.
struct OccupancyState {
    std::map<std::string, bool> occupied;

    bool is_occupied(const std::string& space) const;
};

/// Immutable undirected lot graph: typed nodes with coordinates, edges with
/// physical lengths, and declared side-by-side space pairs.
class LotGraph {
public:
    struct Adjacent {
        std::string to;
        double length;
    };

    /// Parses and validates a layout document. Throws LotError on any
    /// structural violation (see the validation rules in load()).
    static LotGraph load(const nlohmann::json& doc);
    static LotGraph load_file(const std::string& path);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_node(const std::string& id) const;
    const Node& node(const std::string& id) const;

    const std::vector<Adjacent>& adjacent(const std::string& id) const;

    /// Space / entrance / exit ids, sorted lexicographically.
    const std::vector<std::string>& spaces() const { return spaces_; }
    const std::vector<std::string>& entrances() const { return entrances_; }
    const std::vector<std::string>& exits() const { return exits_; }

    /// Declared side-by-side neighbors of a space (at most 2).
    const std::vector<std::string>& space_neighbors(const std::string& space) const;

    /// Occupancy snapshot from the document's optional `occupied` list.
    OccupancyState initial_state() const;
    OccupancyState all_vacant() const;

private:
    LotGraph() = default;
    void validate() const;

    std::vector<Node> nodes_;  // sorted by id
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, std::vector<Adjacent>> adjacency_;
    std::map<std::string, std::vector<std::string>> space_neighbors_;
    std::vector<std::string> spaces_;
    std::vector<std::string> entrances_;
    std::vector<std::string> exits_;
    std::vector<std::string> initially_occupied_;
};

/// Returns a copy of `state` with exactly the flag for `space` changed.
OccupancyState set_occupancy(const LotGraph& graph, OccupancyState state,
                             const std::string& space, bool occupied);

/// Vacant space ids in canonical (lexicographic) order.
std::vector<std::string> vacant_spaces(const LotGraph& graph, const OccupancyState& state);

/// Difficulty class of a vacant space: 3 if both declared neighbors are
/// occupied, 2 if exactly one, 1 otherwise. Missing neighbors count vacant.
int space_difficulty(const LotGraph& graph, const OccupancyState& state,
                     const std::string& space);

}  // namespace opsr
