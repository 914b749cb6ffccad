#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "terra3d/error.hpp"
#include "terra3d/geodata/network3d.hpp"

namespace terra3d::network {

using geodata::Network3D;

class NoRouteError : public Error {
public:
    NoRouteError(const std::string& from, const std::string& to)
        : Error("no route from '" + from + "' to '" + to + "'") {}
};

struct RouteResult {
    std::vector<std::string> node_path;
    double total_length = 0.0;
    std::size_t layer_transitions = 0;  // connector edges traversed
};

/**
 * Minimum-length path by Dijkstra's algorithm.
 *
 * Frontier entries with equal distance pop in ascending node-id order and
 * predecessors change only on strict improvement, so routes are
 * deterministic. Throws ArgumentError for unknown ids and NoRouteError when
 * `to` is unreachable.
 */
RouteResult shortest_path(const Network3D& net, std::string_view from, std::string_view to);

// Shortest path over the combined outdoor/indoor graph. Layers can only be
// crossed on connector edges, each counted in layer_transitions.
RouteResult indoor_outdoor_route(const Network3D& net, std::string_view from, std::string_view to);

}  // namespace terra3d::network
