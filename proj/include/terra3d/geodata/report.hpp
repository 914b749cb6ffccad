#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace terra3d::geodata {

enum class AnalysisKind {
    slope,
    aspect,
    plane_curvature,
    profile_curvature,
    correlation,
    trend_surface,
    idw,
    semivariogram,
    kriging,
    nurbs,
    network_indices,
    route,
    components,
    neighbors,
    geocode,
    address_route,
};

std::string_view to_string(AnalysisKind kind);
AnalysisKind analysis_kind_from_string(std::string_view name);

struct InputDigest {
    std::string path;
    std::string sha256;

    friend bool operator==(const InputDigest&, const InputDigest&) = default;
};

struct Provenance {
    std::vector<InputDigest> inputs;
    std::string timestamp;  // ISO-8601 UTC

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/**
 * Persisted result of one analysis: JSON object with keys `analysis`,
 * `parameters`, `outputs` and `provenance`.
 */
struct AnalysisReport {
    AnalysisKind analysis = AnalysisKind::slope;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
    Provenance provenance;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Digests each input file. The timestamp comes from SOURCE_DATE_EPOCH when
// set and is the Unix epoch otherwise, so reports are reproducible.
Provenance make_provenance(const std::vector<std::filesystem::path>& inputs);

std::string format_report(const AnalysisReport& report);
AnalysisReport parse_report(std::string_view text, const std::string& source = {});

void save_report(const AnalysisReport& report, const std::filesystem::path& path);
AnalysisReport load_report(const std::filesystem::path& path);

}  // namespace terra3d::geodata
