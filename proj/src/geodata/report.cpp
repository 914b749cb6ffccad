#include "terra3d/geodata/report.hpp"

#include <array>
#include <cstdlib>
#include <ctime>

#include "terra3d/error.hpp"
#include "terra3d/geodata/csv.hpp"
#include "terra3d/geodata/file_io.hpp"

namespace terra3d::geodata {

using nlohmann::ordered_json;

namespace {

struct KindName {
    AnalysisKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 16> kKindNames = {{
    {AnalysisKind::slope, "slope"},
    {AnalysisKind::aspect, "aspect"},
    {AnalysisKind::plane_curvature, "plane_curvature"},
    {AnalysisKind::profile_curvature, "profile_curvature"},
    {AnalysisKind::correlation, "correlation"},
    {AnalysisKind::trend_surface, "trend_surface"},
    {AnalysisKind::idw, "idw"},
    {AnalysisKind::semivariogram, "semivariogram"},
    {AnalysisKind::kriging, "kriging"},
    {AnalysisKind::nurbs, "nurbs"},
    {AnalysisKind::network_indices, "network_indices"},
    {AnalysisKind::route, "route"},
    {AnalysisKind::components, "components"},
    {AnalysisKind::neighbors, "neighbors"},
    {AnalysisKind::geocode, "geocode"},
    {AnalysisKind::address_route, "address_route"},
}};

std::string iso_timestamp(std::time_t t) {
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

}  // namespace

std::string_view to_string(AnalysisKind kind) {
    for (const auto& kn : kKindNames) {
        if (kn.kind == kind) {
            return kn.name;
        }
    }
    return "unknown";
}

AnalysisKind analysis_kind_from_string(std::string_view name) {
    for (const auto& kn : kKindNames) {
        if (kn.name == name) {
            return kn.kind;
        }
    }
    throw FormatError({}, "unknown analysis kind '" + std::string(name) + "'");
}

Provenance make_provenance(const std::vector<std::filesystem::path>& inputs) {
    Provenance p;
    for (const auto& path : inputs) {
        p.inputs.push_back({path.string(), file_sha256(path)});
    }
    std::time_t t = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        double v = 0.0;
        if (csv::parse_real(epoch, v) && v >= 0.0) {
            t = static_cast<std::time_t>(v);
        }
    }
    p.timestamp = iso_timestamp(t);
    return p;
}

std::string format_report(const AnalysisReport& report) {
    ordered_json doc;
    doc["analysis"] = to_string(report.analysis);
    doc["parameters"] = report.parameters;
    doc["outputs"] = report.outputs;
    ordered_json inputs = ordered_json::array();
    for (const auto& in : report.provenance.inputs) {
        inputs.push_back({{"path", in.path}, {"sha256", in.sha256}});
    }
    doc["provenance"] = {{"inputs", inputs}, {"timestamp", report.provenance.timestamp}};
    return doc.dump(2) + "\n";
}

AnalysisReport parse_report(std::string_view text, const std::string& source) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw FormatError(source, std::string("invalid JSON: ") + e.what());
    }
    for (const char* key : {"analysis", "parameters", "outputs", "provenance"}) {
        if (!doc.is_object() || !doc.contains(key)) {
            throw FormatError(source, std::string("report is missing \"") + key + "\"");
        }
    }
    AnalysisReport r;
    try {
        r.analysis = analysis_kind_from_string(doc.at("analysis").get<std::string>());
        r.parameters = doc.at("parameters");
        r.outputs = doc.at("outputs");
        const auto& prov = doc.at("provenance");
        for (const auto& in : prov.at("inputs")) {
            r.provenance.inputs.push_back({in.at("path").get<std::string>(), in.at("sha256").get<std::string>()});
        }
        r.provenance.timestamp = prov.at("timestamp").get<std::string>();
    } catch (const ordered_json::exception& e) {
        throw FormatError(source, std::string("malformed report: ") + e.what());
    }
    return r;
}

void save_report(const AnalysisReport& report, const std::filesystem::path& path) {
    write_file_atomic(path, format_report(report));
}

AnalysisReport load_report(const std::filesystem::path& path) {
    return parse_report(read_text_file(path), path.string());
}

}  // namespace terra3d::geodata
