#include "terra3d/network/indices.hpp"

#include <algorithm>
#include <numeric>

#include "terra3d/error.hpp"

namespace terra3d::network {

namespace {

// Component label per node, labels numbered in order of smallest member id.
std::vector<std::size_t> label_components(const Network3D& net, std::size_t& count) {
    const std::size_t n = net.node_count();
    std::vector<std::size_t> by_rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        by_rank[net.id_rank(i)] = i;
    }
    constexpr auto kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, kUnset);
    count = 0;
    std::vector<std::size_t> stack;
    for (const std::size_t seed : by_rank) {
        if (label[seed] != kUnset) {
            continue;
        }
        label[seed] = count;
        stack.push_back(seed);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (const auto& adj : net.adjacent(u)) {
                if (label[adj.node] == kUnset) {
                    label[adj.node] = count;
                    stack.push_back(adj.node);
                }
            }
        }
        ++count;
    }
    return label;
}

}  // namespace

NetworkIndices measure_indices(const Network3D& net) {
    if (net.node_count() < 2) {
        throw ArgumentError("network indices need at least 2 nodes");
    }
    NetworkIndices ix;
    ix.m = net.edge_count();
    ix.n = net.node_count();
    label_components(net, ix.p_subgraphs);

    const auto m = static_cast<double>(ix.m);
    const auto n = static_cast<double>(ix.n);
    const auto p = static_cast<double>(ix.p_subgraphs);
    ix.k_loops = static_cast<long long>(ix.m) - static_cast<long long>(ix.n) + static_cast<long long>(ix.p_subgraphs);
    const double max_lines = n * (n - 1.0) / 2.0;
    ix.beta = m / n;
    ix.alpha_paper = (((m - n + p) / 2.0 - (n - 1.0)) / max_lines) * 100.0;
    const double max_loops = max_lines - (n - 1.0);
    if (max_loops > 0.0) {
        ix.alpha_standard = (static_cast<double>(ix.k_loops) / max_loops) * 100.0;
    }
    ix.gamma = (m / max_lines) * 100.0;
    return ix;
}

std::vector<std::vector<std::string>> connectivity(const Network3D& net) {
    std::size_t count = 0;
    const auto label = label_components(net, count);
    std::vector<std::vector<std::string>> comps(count);
    for (std::size_t i = 0; i < net.node_count(); ++i) {
        comps[label[i]].push_back(net.node(i).id);
    }
    for (auto& c : comps) {
        std::sort(c.begin(), c.end());
    }
    return comps;
}

std::vector<std::string> neighbors(const Network3D& net, std::string_view id) {
    const std::size_t idx = net.index_of(id);
    std::vector<std::string> out;
    for (const auto& adj : net.adjacent(idx)) {
        out.push_back(net.node(adj.node).id);
    }
    return out;
}

}  // namespace terra3d::network
