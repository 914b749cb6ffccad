#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace terra3d::geodata {

enum class Layer { outdoor, indoor };
enum class EdgeKind { road, corridor, connector };

std::string_view to_string(Layer layer);
std::string_view to_string(EdgeKind kind);

struct NetworkNode {
    std::string id;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    Layer layer = Layer::outdoor;
};

// Input edge; a missing length defaults to the 3D distance between endpoints.
struct EdgeSpec {
    std::string from;
    std::string to;
    std::optional<double> length;
    EdgeKind kind = EdgeKind::road;
};

struct NetworkEdge {
    std::size_t a = 0;  // node index, a < b
    std::size_t b = 0;
    double length = 0.0;
    EdgeKind kind = EdgeKind::road;
};

struct Adjacent {
    std::size_t node = 0;
    std::size_t edge = 0;
};

/**
 * Undirected, layered graph of 3D nodes.
 *
 * Invariants checked at construction: unique node ids, no dangling or
 * self-loop edges, non-negative lengths, and every outdoor/indoor edge is a
 * connector. Parallel edges collapse to the shortest one.
 */
class Network3D {
public:
    Network3D() = default;
    Network3D(std::vector<NetworkNode> nodes, const std::vector<EdgeSpec>& edges,
              const std::string& source = {});

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const NetworkNode> nodes() const { return nodes_; }
    std::span<const NetworkEdge> edges() const { return edges_; }
    const NetworkNode& node(std::size_t i) const { return nodes_[i]; }
    const NetworkEdge& edge(std::size_t i) const { return edges_[i]; }

    std::optional<std::size_t> find(std::string_view id) const;
    // Throws ArgumentError("unknown node id ...").
    std::size_t index_of(std::string_view id) const;

    // Adjacency sorted by neighbor id.
    std::span<const Adjacent> adjacent(std::size_t node) const { return adjacency_[node]; }

    // Position of each node in ascending-id order; used for tie-breaking.
    std::size_t id_rank(std::size_t node) const { return rank_[node]; }

private:
    std::vector<NetworkNode> nodes_;
    std::vector<NetworkEdge> edges_;
    std::vector<std::vector<Adjacent>> adjacency_;
    std::vector<std::size_t> rank_;
    std::map<std::string, std::size_t, std::less<>> by_id_;
};

Network3D load_network(const std::filesystem::path& path);
Network3D parse_network(std::string_view json_text, const std::string& source = {});

// Serializes with explicit edge lengths, nodes in input order and edges in
// (a, b) order.
std::string format_network(const Network3D& net);

}  // namespace terra3d::geodata
