#include "terra3d/network/geocode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace terra3d::network {

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += t;
    }
    return out;
}

}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = j;
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
            diag = up;
        }
    }
    return row[b.size()];
}

double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const std::set<std::string> sa(a.begin(), a.end());
    const std::set<std::string> sb(b.begin(), b.end());
    if (sa.empty() && sb.empty()) {
        return 0.0;
    }
    std::size_t common = 0;
    for (const auto& t : sa) {
        common += sb.count(t);
    }
    return static_cast<double>(common) / static_cast<double>(sa.size() + sb.size() - common);
}

double address_score(const std::vector<std::string>& query_tokens, const std::vector<std::string>& record_tokens) {
    const std::string q = join_tokens(query_tokens);
    const std::string r = join_tokens(record_tokens);
    if (q == r) {
        return 1.0;
    }
    const double longest = static_cast<double>(std::max(q.size(), r.size()));
    const double lev = static_cast<double>(levenshtein(q, r)) / longest;
    return 0.5 * token_jaccard(query_tokens, record_tokens) + 0.5 * (1.0 - lev);
}

std::vector<GeocodeMatch> geocode(const AddressLibrary& library, std::string_view query, std::size_t k) {
    if (k == 0) {
        throw ArgumentError("k must be positive");
    }
    const auto tokens = geodata::normalize_address(query);
    if (tokens.empty()) {
        throw GeocodeError("empty query");
    }
    if (library.empty()) {
        throw GeocodeError("empty address library");
    }
    std::vector<GeocodeMatch> matches;
    matches.reserve(library.size());
    for (const auto& rec : library.records()) {
        matches.push_back({rec.id, address_score(tokens, rec.tokens), rec.x, rec.y, rec.z});
    }
    const auto before = [](const GeocodeMatch& a, const GeocodeMatch& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return a.record_id < b.record_id;
    };
    const std::size_t keep = std::min(k, matches.size());
    std::partial_sort(matches.begin(), matches.begin() + static_cast<long>(keep), matches.end(), before);
    matches.resize(keep);
    return matches;
}

std::string snap_to_node(const Network3D& net, double x, double y, double z) {
    if (net.node_count() == 0) {
        throw ArgumentError("cannot snap to an empty network");
    }
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < net.node_count(); ++i) {
        const auto& n = net.node(i);
        const double d = std::hypot(n.x - x, n.y - y, n.z - z);
        if (d < best_d || (d == best_d && n.id < net.node(best).id)) {
            best = i;
            best_d = d;
        }
    }
    return net.node(best).id;
}

AddressRoute route_between_addresses(const Network3D& net, const AddressLibrary& library,
                                     std::string_view from_addr, std::string_view to_addr) {
    const auto top = [&](std::string_view addr, const char* side) {
        const auto matches = geocode(library, addr, 1);
        if (matches.empty() || !(matches.front().score > 0.0)) {
            throw GeocodeError(std::string("geocode failure for ") + side + " address '" + std::string(addr) + "'");
        }
        return matches.front();
    };
    AddressRoute out;
    out.from = top(from_addr, "from");
    out.to = top(to_addr, "to");
    out.from_node = snap_to_node(net, out.from.x, out.from.y, out.from.z);
    out.to_node = snap_to_node(net, out.to.x, out.to.y, out.to.z);
    out.route = indoor_outdoor_route(net, out.from_node, out.to_node);
    return out;
}

}  // namespace terra3d::network
