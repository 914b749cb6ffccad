#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "terra3d/error.hpp"
#include "terra3d/geodata/address_library.hpp"
#include "terra3d/geodata/network3d.hpp"
#include "terra3d/network/routing.hpp"

namespace terra3d::network {

using geodata::AddressLibrary;

class GeocodeError : public Error {
public:
    using Error::Error;
};

struct GeocodeMatch {
    std::string record_id;
    double score = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

std::size_t levenshtein(std::string_view a, std::string_view b);

// |A ∩ B| / |A ∪ B| over distinct tokens; 0 when both are empty.
double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

// 0.5 * token Jaccard + 0.5 * (1 - levenshtein / max length) on the
// space-joined tokens; exactly 1 when the joined strings are equal.
double address_score(const std::vector<std::string>& query_tokens, const std::vector<std::string>& record_tokens);

/**
 * Top-k records by address_score, descending, ties by ascending record id.
 * Throws GeocodeError for an empty query or library and ArgumentError for
 * k == 0.
 */
std::vector<GeocodeMatch> geocode(const AddressLibrary& library, std::string_view query, std::size_t k);

struct AddressRoute {
    GeocodeMatch from;
    GeocodeMatch to;
    std::string from_node;
    std::string to_node;
    RouteResult route;
};

// Nearest node by 3D distance, ties by ascending id.
std::string snap_to_node(const Network3D& net, double x, double y, double z);

/**
 * Geocodes both addresses (top match each; a top score of 0 is a failure),
 * snaps each location to the nearest network node and routes between them
 * with indoor_outdoor_route.
 */
AddressRoute route_between_addresses(const Network3D& net, const AddressLibrary& library,
                                     std::string_view from_addr, std::string_view to_addr);

}  // namespace terra3d::network
