#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "terra3d/geodata/network3d.hpp"

namespace terra3d::network {

using geodata::Network3D;

/**
 * Graph connectivity indices over m lines, n nodes and p connected
 * sub-graphs. Percentages are in [0, 100] units.
 *
 *   beta           = m / n
 *   k_loops        = m - n + p
 *   alpha_paper    = ((m - n + p)/2 - (n - 1)) / (n(n-1)/2) * 100
 *   alpha_standard = (m - n + p) / (n(n-1)/2 - (n - 1)) * 100
 *   gamma          = m / (n(n-1)/2) * 100
 *
 * alpha_paper can be negative. alpha_standard is the ratio of actual to
 * maximum independent loops; it is empty for n = 2, where the maximum loop
 * count is zero.
 */
struct NetworkIndices {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t p_subgraphs = 0;
    double beta = 0.0;
    long long k_loops = 0;
    double alpha_paper = 0.0;
    std::optional<double> alpha_standard;
    double gamma = 0.0;
};

// Throws ArgumentError when the network has fewer than 2 nodes.
NetworkIndices measure_indices(const Network3D& net);

// Connected components, each sorted by id, ordered by smallest member id.
std::vector<std::vector<std::string>> connectivity(const Network3D& net);

// Ids of nodes sharing an edge with `id`, ascending. Throws ArgumentError
// for unknown ids.
std::vector<std::string> neighbors(const Network3D& net, std::string_view id);

}  // namespace terra3d::network
