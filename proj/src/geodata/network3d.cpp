#include "terra3d/geodata/network3d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "terra3d/error.hpp"
#include "terra3d/geodata/file_io.hpp"

namespace terra3d::geodata {

using nlohmann::json;

std::string_view to_string(Layer layer) {
    return layer == Layer::outdoor ? "outdoor" : "indoor";
}

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::road:
            return "road";
        case EdgeKind::corridor:
            return "corridor";
        case EdgeKind::connector:
            return "connector";
    }
    return "road";
}

Network3D::Network3D(std::vector<NetworkNode> nodes, const std::vector<EdgeSpec>& edges,
                     const std::string& source)
    : nodes_(std::move(nodes)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        if (n.id.empty()) {
            throw FormatError(source, "node " + std::to_string(i) + " has an empty id");
        }
        if (!std::isfinite(n.x) || !std::isfinite(n.y) || !std::isfinite(n.z)) {
            throw FormatError(source, "node '" + n.id + "' has non-finite coordinates");
        }
        if (!by_id_.emplace(n.id, i).second) {
            throw FormatError(source, "duplicate node id '" + n.id + "'");
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, NetworkEdge> unique;
    for (const auto& e : edges) {
        const auto from = find(e.from);
        const auto to = find(e.to);
        if (!from || !to) {
            throw FormatError(source, "dangling endpoint '" + (from ? e.to : e.from) + "' in edge " +
                                          e.from + "-" + e.to);
        }
        if (*from == *to) {
            throw FormatError(source, "self-loop edge at '" + e.from + "'");
        }
        const auto& na = nodes_[*from];
        const auto& nb = nodes_[*to];
        if (na.layer != nb.layer && e.kind != EdgeKind::connector) {
            throw FormatError(source, "cross-layer edge must be connector: " + e.from + "-" + e.to +
                                          " is " + std::string(to_string(e.kind)));
        }
        double length = 0.0;
        if (e.length) {
            length = *e.length;
            if (!std::isfinite(length) || length < 0.0) {
                throw FormatError(source, "negative length on edge " + e.from + "-" + e.to);
            }
        } else {
            length = std::hypot(na.x - nb.x, na.y - nb.y, na.z - nb.z);
        }
        const auto [a, b] = std::minmax(*from, *to);
        const NetworkEdge edge{a, b, length, e.kind};
        auto [it, inserted] = unique.emplace(std::pair(a, b), edge);
        if (!inserted && length < it->second.length) {
            it->second = edge;
        }
    }

    rank_.resize(nodes_.size());
    {
        std::size_t r = 0;
        for (const auto& [id, idx] : by_id_) {
            rank_[idx] = r++;
        }
    }

    adjacency_.resize(nodes_.size());
    edges_.reserve(unique.size());
    for (const auto& [key, edge] : unique) {
        const std::size_t ei = edges_.size();
        edges_.push_back(edge);
        adjacency_[edge.a].push_back({edge.b, ei});
        adjacency_[edge.b].push_back({edge.a, ei});
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end(),
                  [this](const Adjacent& l, const Adjacent& r) { return rank_[l.node] < rank_[r.node]; });
    }
}

std::optional<std::size_t> Network3D::find(std::string_view id) const {
    const auto it = by_id_.find(id);
    if (it == by_id_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Network3D::index_of(std::string_view id) const {
    const auto idx = find(id);
    if (!idx) {
        throw ArgumentError("unknown node id '" + std::string(id) + "'");
    }
    return *idx;
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where, const std::string& source) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw FormatError(source, where + " is missing \"" + key + "\"");
    }
    return obj.at(key);
}

double require_number(const json& obj, const char* key, const std::string& where, const std::string& source) {
    const json& v = require(obj, key, where, source);
    if (!v.is_number()) {
        throw FormatError(source, where + " field \"" + key + "\" must be a number");
    }
    return v.get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& where,
                           const std::string& source) {
    const json& v = require(obj, key, where, source);
    if (!v.is_string()) {
        throw FormatError(source, where + " field \"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

}  // namespace

Network3D parse_network(std::string_view json_text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(source, std::string("invalid JSON: ") + e.what());
    }
    const json& jnodes = require(doc, "nodes", "document", source);
    const json& jedges = require(doc, "edges", "document", source);
    if (!jnodes.is_array() || !jedges.is_array()) {
        throw FormatError(source, "\"nodes\" and \"edges\" must be arrays");
    }

    std::vector<NetworkNode> nodes;
    for (std::size_t i = 0; i < jnodes.size(); ++i) {
        const std::string where = "node " + std::to_string(i);
        const json& jn = jnodes[i];
        NetworkNode n;
        n.id = require_string(jn, "id", where, source);
        n.x = require_number(jn, "x", where, source);
        n.y = require_number(jn, "y", where, source);
        n.z = require_number(jn, "z", where, source);
        const std::string layer = require_string(jn, "layer", where, source);
        if (layer == "outdoor") {
            n.layer = Layer::outdoor;
        } else if (layer == "indoor") {
            n.layer = Layer::indoor;
        } else {
            throw FormatError(source, where + " has unknown layer '" + layer + "'");
        }
        nodes.push_back(std::move(n));
    }

    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < jedges.size(); ++i) {
        const std::string where = "edge " + std::to_string(i);
        const json& je = jedges[i];
        EdgeSpec e;
        e.from = require_string(je, "from", where, source);
        e.to = require_string(je, "to", where, source);
        if (je.contains("length") && !je.at("length").is_null()) {
            e.length = require_number(je, "length", where, source);
        }
        const std::string kind = require_string(je, "kind", where, source);
        if (kind == "road") {
            e.kind = EdgeKind::road;
        } else if (kind == "corridor") {
            e.kind = EdgeKind::corridor;
        } else if (kind == "connector") {
            e.kind = EdgeKind::connector;
        } else {
            throw FormatError(source, where + " has unknown kind '" + kind + "'");
        }
        edges.push_back(std::move(e));
    }
    return Network3D(std::move(nodes), edges, source);
}

Network3D load_network(const std::filesystem::path& path) {
    return parse_network(read_text_file(path), path.string());
}

std::string format_network(const Network3D& net) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : net.nodes()) {
        doc["nodes"].push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}, {"z", n.z}, {"layer", to_string(n.layer)}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : net.edges()) {
        doc["edges"].push_back({{"from", net.node(e.a).id},
                                {"to", net.node(e.b).id},
                                {"length", e.length},
                                {"kind", to_string(e.kind)}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace terra3d::geodata
