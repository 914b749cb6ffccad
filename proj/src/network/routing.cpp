#include "terra3d/network/routing.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace terra3d::network {

namespace {

constexpr auto kNone = static_cast<std::size_t>(-1);

RouteResult dijkstra(const Network3D& net, std::string_view from_id, std::string_view to_id) {
    const std::size_t source = net.index_of(from_id);
    const std::size_t target = net.index_of(to_id);
    const std::size_t n = net.node_count();

    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> pred_edge(n, kNone);
    std::vector<bool> settled(n, false);
    // (distance, id rank) keeps equal-distance pops in ascending-id order
    std::set<std::pair<double, std::size_t>> frontier;
    std::vector<std::size_t> by_rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        by_rank[net.id_rank(i)] = i;
    }

    dist[source] = 0.0;
    frontier.emplace(0.0, net.id_rank(source));
    while (!frontier.empty()) {
        const auto [d, rank] = *frontier.begin();
        frontier.erase(frontier.begin());
        const std::size_t u = by_rank[rank];
        settled[u] = true;
        if (u == target) {
            break;
        }
        for (const auto& adj : net.adjacent(u)) {
            if (settled[adj.node]) {
                continue;
            }
            const double nd = d + net.edge(adj.edge).length;
            if (nd < dist[adj.node]) {
                if (dist[adj.node] < std::numeric_limits<double>::infinity()) {
                    frontier.erase({dist[adj.node], net.id_rank(adj.node)});
                }
                dist[adj.node] = nd;
                pred_edge[adj.node] = adj.edge;
                frontier.emplace(nd, net.id_rank(adj.node));
            }
        }
    }
    if (!settled[target]) {
        throw NoRouteError(std::string(from_id), std::string(to_id));
    }

    std::vector<std::size_t> edges;
    for (std::size_t v = target; v != source;) {
        const auto& e = net.edge(pred_edge[v]);
        edges.push_back(pred_edge[v]);
        v = e.a == v ? e.b : e.a;
    }
    std::reverse(edges.begin(), edges.end());

    RouteResult result;
    std::size_t at = source;
    result.node_path.push_back(net.node(at).id);
    for (const std::size_t ei : edges) {
        const auto& e = net.edge(ei);
        at = e.a == at ? e.b : e.a;
        result.node_path.push_back(net.node(at).id);
        result.total_length += e.length;
        if (e.kind == geodata::EdgeKind::connector) {
            ++result.layer_transitions;
        }
    }
    return result;
}

}  // namespace

RouteResult shortest_path(const Network3D& net, std::string_view from, std::string_view to) {
    return dijkstra(net, from, to);
}

RouteResult indoor_outdoor_route(const Network3D& net, std::string_view from, std::string_view to) {
    return dijkstra(net, from, to);
}

}  // namespace terra3d::network
