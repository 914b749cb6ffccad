#include "terra3d/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "terra3d/geodata.hpp"
#include "terra3d/geodata/csv.hpp"
#include "terra3d/network.hpp"
#include "terra3d/stats.hpp"
#include "terra3d/terrain.hpp"

#ifndef TERRA3D_VERSION
#define TERRA3D_VERSION "dev"
#endif

namespace terra3d::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using geodata::AnalysisKind;
using geodata::AnalysisReport;
using geodata::GridSpec;
using geodata::RasterGrid;

// Collects every output of a command and writes them only after the command
// has fully succeeded.
class Session {
public:
    void stage_file(const fs::path& path, std::string contents) {
        files_.emplace_back(path, std::move(contents));
    }

    void stage_stdout(const std::string& text) { stdout_ += text; }

    // Report goes to `path` when given, otherwise to stdout.
    void stage_report(const AnalysisReport& report, const std::string& path) {
        if (path.empty()) {
            stage_stdout(geodata::format_report(report));
        } else {
            stage_file(path, geodata::format_report(report));
        }
    }

    void commit(std::ostream& out) {
        for (const auto& [path, contents] : files_) {
            geodata::write_file_atomic(path, contents);
        }
        out << stdout_;
        out.flush();
    }

private:
    std::vector<std::pair<fs::path, std::string>> files_;
    std::string stdout_;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

double parse_real_arg(const std::string& s, const std::string& what) {
    double v = 0.0;
    if (!geodata::csv::parse_real(s, v)) {
        throw UsageError("invalid number '" + s + "' in " + what);
    }
    return v;
}

std::size_t parse_count_arg(const std::string& s, const std::string& what) {
    const double v = parse_real_arg(s, what);
    if (v < 1.0 || v != static_cast<double>(static_cast<long long>(v)) || v > 1e7) {
        throw UsageError(what + " needs a positive integer, got '" + s + "'");
    }
    return static_cast<std::size_t>(v);
}

// "x0,y0,cellsize,ncols,nrows"
GridSpec parse_grid_spec(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 5) {
        throw UsageError("--grid expects x0,y0,cellsize,ncols,nrows, got '" + s + "'");
    }
    GridSpec spec;
    spec.x_origin = parse_real_arg(parts[0], "--grid");
    spec.y_origin = parse_real_arg(parts[1], "--grid");
    spec.cellsize = parse_real_arg(parts[2], "--grid");
    if (!(spec.cellsize > 0.0)) {
        throw UsageError("--grid cellsize must be positive");
    }
    spec.ncols = parse_count_arg(parts[3], "--grid ncols");
    spec.nrows = parse_count_arg(parts[4], "--grid nrows");
    return spec;
}

std::pair<std::size_t, std::size_t> parse_control(const std::string& s) {
    const auto x = s.find_first_of("xX");
    if (x == std::string::npos) {
        throw UsageError("--control expects NUxNV, e.g. 8x8, got '" + s + "'");
    }
    return {parse_count_arg(s.substr(0, x), "--control"), parse_count_arg(s.substr(x + 1), "--control")};
}

geodata::WorldPoint parse_xy(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) {
        throw UsageError("expected x,y, got '" + s + "'");
    }
    return {parse_real_arg(parts[0], "--at"), parse_real_arg(parts[1], "--at")};
}

json grid_spec_json(const GridSpec& g) {
    return {{"x_origin", g.x_origin}, {"y_origin", g.y_origin}, {"cellsize", g.cellsize},
            {"ncols", g.ncols},       {"nrows", g.nrows}};
}

json grid_summary(const RasterGrid& g, const std::string& path) {
    std::size_t valid = 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (const double v : g.values()) {
        if (!g.is_missing_value(v)) {
            ++valid;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
    }
    json j = {{"grid", path}, {"ncols", g.ncols()}, {"nrows", g.nrows()}, {"valid_cells", valid}};
    if (valid > 0) {
        j["min"] = lo;
        j["max"] = hi;
        j["mean"] = sum / static_cast<double>(valid);
    } else {
        j["min"] = nullptr;
        j["max"] = nullptr;
        j["mean"] = nullptr;
    }
    return j;
}

AnalysisReport make_report(AnalysisKind kind, json parameters, json outputs,
                           const std::vector<fs::path>& inputs) {
    AnalysisReport r;
    r.analysis = kind;
    r.parameters = std::move(parameters);
    r.outputs = std::move(outputs);
    r.provenance = geodata::make_provenance(inputs);
    return r;
}

json route_json(const network::RouteResult& route) {
    return {{"node_path", route.node_path},
            {"total_length", route.total_length},
            {"layer_transitions", route.layer_transitions}};
}

json match_json(const network::GeocodeMatch& m) {
    return {{"record_id", m.record_id}, {"score", m.score}, {"location", {m.x, m.y, m.z}}};
}

// Shared grid outputs: ASCII grid, optional SVG heatmap.
void stage_grid(Session& session, const RasterGrid& grid, const std::string& out, const std::string& svg) {
    session.stage_file(out, geodata::format_raster(grid));
    if (!svg.empty()) {
        session.stage_file(svg, geodata::render_heatmap_svg(grid));
    }
}

void add_version(CLI::App* app) {
    app->set_version_flag("--version", std::string("terra3d ") + TERRA3D_VERSION);
}

CLI::App* add_command(CLI::App& parent, const std::string& name, const std::string& description) {
    CLI::App* sub = parent.add_subcommand(name, description);
    add_version(sub);
    return sub;
}

struct Command {
    CLI::App* app;
    std::function<void(Session&)> action;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"terra3d: terrain, spatial statistics and 3D network analysis"};
    app.name("terra3d");
    add_version(&app);
    app.require_subcommand(1);

    std::vector<Command> commands;

    // ---- terrain -------------------------------------------------------------
    CLI::App* terrain_cmd = add_command(app, "terrain", "Topographic factors from a DEM");
    terrain_cmd->require_subcommand(1);
    struct TerrainOpts {
        std::string dem, out, svg, report;
    };
    const auto add_terrain = [&](const std::string& name, const std::string& description, AnalysisKind kind,
                                 RasterGrid (*fn)(const RasterGrid&, const terrain::TerrainOptions&)) {
        auto opts = std::make_shared<TerrainOpts>();
        CLI::App* sub = add_command(*terrain_cmd, name, description);
        sub->add_option("--dem", opts->dem, "Input DEM (ASCII grid)")->required();
        sub->add_option("--out", opts->out, "Output ASCII grid")->required();
        sub->add_option("--svg", opts->svg, "Optional SVG heatmap of the output");
        sub->add_option("--report", opts->report, "Optional JSON report path");
        commands.push_back({sub, [opts, kind, fn](Session& s) {
                                const RasterGrid dem = geodata::load_raster(opts->dem);
                                const RasterGrid result = fn(dem, {});
                                stage_grid(s, result, opts->out, opts->svg);
                                if (!opts->report.empty()) {
                                    s.stage_report(make_report(kind, {{"dem", opts->dem}},
                                                               grid_summary(result, opts->out), {opts->dem}),
                                                   opts->report);
                                }
                            }});
    };
    add_terrain("slope", "Slope in degrees", AnalysisKind::slope, &terrain::slope);
    add_terrain("aspect", "Aspect in degrees (flat cells -1)", AnalysisKind::aspect, &terrain::aspect);
    add_terrain("plan-curv", "Plane (contour) curvature", AnalysisKind::plane_curvature, &terrain::plane_curvature);
    add_terrain("prof-curv", "Profile curvature", AnalysisKind::profile_curvature, &terrain::profile_curvature);

    // ---- stats ---------------------------------------------------------------
    CLI::App* stats_cmd = add_command(app, "stats", "Spatial statistics on point sets");
    stats_cmd->require_subcommand(1);

    {
        struct Opts {
            std::string points, attrs, report;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*stats_cmd, "correlate", "Pearson correlation matrix of attributes");
        sub->add_option("--points", o->points, "Points CSV")->required();
        sub->add_option("--attrs", o->attrs, "Comma-separated attribute names")->required();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto pts = geodata::load_points(o->points);
                                const auto names = split(o->attrs, ',');
                                const Eigen::MatrixXd r = stats::correlation_matrix(pts, names);
                                json matrix = json::array();
                                for (Eigen::Index i = 0; i < r.rows(); ++i) {
                                    json row = json::array();
                                    for (Eigen::Index j = 0; j < r.cols(); ++j) {
                                        row.push_back(r(i, j));
                                    }
                                    matrix.push_back(row);
                                }
                                s.stage_report(make_report(AnalysisKind::correlation,
                                                           {{"points", o->points}, {"attrs", names}},
                                                           {{"attrs", names}, {"matrix", matrix}}, {o->points}),
                                               o->report);
                            }});
    }
    {
        struct Opts {
            std::string points, attr = "z", report, grid, out, svg;
            int degree = 1;
            std::vector<std::string> at;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*stats_cmd, "trend", "Least-squares polynomial trend surface");
        sub->add_option("--points", o->points, "Points CSV")->required();
        sub->add_option("--degree", o->degree, "Polynomial degree")->required()->check(CLI::Range(1, 3));
        sub->add_option("--attr", o->attr, "Attribute to fit")->capture_default_str();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        sub->add_option("--at", o->at, "Evaluate the surface at x,y (repeatable)");
        sub->add_option("--grid", o->grid, "Evaluate on grid x0,y0,cellsize,ncols,nrows");
        sub->add_option("--out", o->out, "ASCII grid output for --grid");
        sub->add_option("--svg", o->svg, "SVG heatmap for --grid");
        commands.push_back({sub, [o](Session& s) {
                                if (o->grid.empty() != o->out.empty()) {
                                    throw UsageError("--grid and --out must be given together");
                                }
                                const auto pts = geodata::load_points(o->points);
                                const auto model = stats::fit_trend_surface(pts, o->degree, o->attr);
                                json monomials = json::array();
                                for (const auto& [i, j] : stats::trend_monomials(o->degree)) {
                                    monomials.push_back({i, j});
                                }
                                json outputs = {
                                    {"degree", model.degree},
                                    {"monomials", monomials},
                                    {"coefficients", model.coefficients},
                                    {"frame",
                                     {{"cx", model.frame.cx}, {"cy", model.frame.cy}, {"sx", model.frame.sx},
                                      {"sy", model.frame.sy}}},
                                    {"frame_coefficients", model.frame_coefficients},
                                    {"r_squared", model.r_squared},
                                    {"residual_rms", model.residual_rms}};
                                if (!o->at.empty()) {
                                    json evals = json::array();
                                    for (const auto& a : o->at) {
                                        const auto q = parse_xy(a);
                                        evals.push_back({{"x", q.x},
                                                         {"y", q.y},
                                                         {"value", stats::evaluate_trend_surface(model, q.x, q.y)}});
                                    }
                                    outputs["evaluations"] = evals;
                                }
                                json params = {{"points", o->points}, {"attr", o->attr}, {"degree", o->degree}};
                                if (!o->grid.empty()) {
                                    const GridSpec spec = parse_grid_spec(o->grid);
                                    auto grid = RasterGrid::filled(spec, stats::kDefaultNodata, 0.0);
                                    for (std::size_t r = 0; r < spec.nrows; ++r) {
                                        for (std::size_t c = 0; c < spec.ncols; ++c) {
                                            const auto p = spec.cell_center(r, c);
                                            grid.set(r, c, stats::evaluate_trend_surface(model, p.x, p.y));
                                        }
                                    }
                                    stage_grid(s, grid, o->out, o->svg);
                                    params["grid"] = grid_spec_json(spec);
                                    outputs["grid_summary"] = grid_summary(grid, o->out);
                                }
                                s.stage_report(
                                    make_report(AnalysisKind::trend_surface, params, outputs, {o->points}),
                                    o->report);
                            }});
    }
    {
        struct Opts {
            std::string points, attr = "z", grid, out, svg, report;
            double power = 2.0;
            std::size_t neighbors = 0;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*stats_cmd, "idw", "Inverse-distance-weighted interpolation to a grid");
        sub->add_option("--points", o->points, "Points CSV")->required();
        sub->add_option("--attr", o->attr, "Attribute to interpolate")->capture_default_str();
        sub->add_option("--power", o->power, "Distance power")->capture_default_str()->check(
            CLI::PositiveNumber);
        sub->add_option("--neighbors", o->neighbors, "Use the k nearest samples (default: all)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--grid", o->grid, "Grid x0,y0,cellsize,ncols,nrows")->required();
        sub->add_option("--out", o->out, "Output ASCII grid")->required();
        sub->add_option("--svg", o->svg, "Optional SVG heatmap");
        sub->add_option("--report", o->report, "Optional JSON report path");
        commands.push_back({sub, [o](Session& s) {
                                const GridSpec spec = parse_grid_spec(o->grid);
                                const auto pts = geodata::load_points(o->points);
                                stats::IdwOptions opts;
                                opts.power = o->power;
                                if (o->neighbors > 0) {
                                    opts.k_neighbors = o->neighbors;
                                }
                                const auto grid = stats::interpolate_grid(pts, o->attr, opts, spec);
                                stage_grid(s, grid, o->out, o->svg);
                                if (!o->report.empty()) {
                                    json params = {{"points", o->points},
                                                   {"attr", o->attr},
                                                   {"power", o->power},
                                                   {"neighbors", o->neighbors > 0 ? json(o->neighbors) : json("all")},
                                                   {"grid", grid_spec_json(spec)}};
                                    s.stage_report(make_report(AnalysisKind::idw, params, grid_summary(grid, o->out),
                                                               {o->points}),
                                                   o->report);
                                }
                            }});
    }
    {
        struct Opts {
            std::string points, attr = "z", model = "spherical", report;
            std::size_t lags = 10;
            double max_lag = 0.0;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*stats_cmd, "variogram", "Empirical semivariogram and fitted model");
        sub->add_option("--points", o->points, "Points CSV")->required();
        sub->add_option("--attr", o->attr, "Attribute")->capture_default_str();
        sub->add_option("--lags", o->lags, "Number of lag bins")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--max-lag", o->max_lag, "Largest separation considered")->required()->check(
            CLI::PositiveNumber);
        sub->add_option("--model", o->model, "Model to fit")
            ->capture_default_str()
            ->check(CLI::IsMember({"spherical", "exponential", "gaussian", "nugget"}));
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto pts = geodata::load_points(o->points);
                                const auto bins = stats::empirical_semivariogram(pts, o->attr, o->lags, o->max_lag);
                                const auto z = pts.attribute(o->attr);
                                double mean = 0.0;
                                for (const double v : z) {
                                    mean += v;
                                }
                                mean /= static_cast<double>(z.size());
                                double var = 0.0;
                                for (const double v : z) {
                                    var += (v - mean) * (v - mean);
                                }
                                var /= static_cast<double>(z.size());
                                const auto model = stats::fit_variogram(
                                    bins, stats::variogram_kind_from_string(o->model), o->max_lag, var);
                                json jbins = json::array();
                                for (const auto& b : bins) {
                                    jbins.push_back({{"lag_center", b.lag_center},
                                                     {"gamma", b.gamma ? json(*b.gamma) : json(nullptr)},
                                                     {"pair_count", b.pair_count}});
                                }
                                json outputs = {{"bins", jbins},
                                                {"model",
                                                 {{"kind", stats::to_string(model.kind)},
                                                  {"nugget", model.nugget},
                                                  {"sill", model.sill},
                                                  {"range", model.range}}}};
                                json params = {{"points", o->points},
                                               {"attr", o->attr},
                                               {"lags", o->lags},
                                               {"max_lag", o->max_lag},
                                               {"model", o->model}};
                                s.stage_report(make_report(AnalysisKind::semivariogram, params, outputs, {o->points}),
                                               o->report);
                            }});
    }
    {
        struct Opts {
            std::string points, attr = "z", model = "spherical", grid, out, svg, variance_out, report;
            double nugget = 0.0, sill = 1.0, range = 1.0;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*stats_cmd, "krige", "Ordinary Kriging to a grid");
        sub->add_option("--points", o->points, "Points CSV")->required();
        sub->add_option("--attr", o->attr, "Attribute")->capture_default_str();
        sub->add_option("--model", o->model, "Variogram model")
            ->capture_default_str()
            ->check(CLI::IsMember({"spherical", "exponential", "gaussian", "nugget"}));
        sub->add_option("--nugget", o->nugget, "Nugget")->capture_default_str()->check(CLI::NonNegativeNumber);
        sub->add_option("--sill", o->sill, "Sill")->required();
        sub->add_option("--range", o->range, "Range")->required()->check(CLI::PositiveNumber);
        sub->add_option("--grid", o->grid, "Grid x0,y0,cellsize,ncols,nrows")->required();
        sub->add_option("--out", o->out, "Output ASCII grid of estimates")->required();
        sub->add_option("--variance-out", o->variance_out, "Optional ASCII grid of kriging variances");
        sub->add_option("--svg", o->svg, "Optional SVG heatmap of the estimates");
        sub->add_option("--report", o->report, "Optional JSON report path");
        commands.push_back({sub, [o](Session& s) {
                                const GridSpec spec = parse_grid_spec(o->grid);
                                stats::VariogramModel model{stats::variogram_kind_from_string(o->model), o->nugget,
                                                            o->sill, o->range};
                                try {
                                    model.validate();
                                } catch (const ArgumentError& e) {
                                    throw UsageError(e.what());
                                }
                                const auto pts = geodata::load_points(o->points);
                                const stats::OrdinaryKriging ok(pts, o->attr, model);
                                auto est = RasterGrid::filled(spec, stats::kDefaultNodata, 0.0);
                                auto var = est;
                                for (std::size_t r = 0; r < spec.nrows; ++r) {
                                    for (std::size_t c = 0; c < spec.ncols; ++c) {
                                        const auto k = ok.estimate(spec.cell_center(r, c));
                                        est.set(r, c, k.estimate);
                                        var.set(r, c, k.variance);
                                    }
                                }
                                stage_grid(s, est, o->out, o->svg);
                                if (!o->variance_out.empty()) {
                                    s.stage_file(o->variance_out, geodata::format_raster(var));
                                }
                                if (!o->report.empty()) {
                                    json params = {{"points", o->points},
                                                   {"attr", o->attr},
                                                   {"model",
                                                    {{"kind", o->model},
                                                     {"nugget", o->nugget},
                                                     {"sill", o->sill},
                                                     {"range", o->range}}},
                                                   {"grid", grid_spec_json(spec)}};
                                    json outputs = {{"estimate", grid_summary(est, o->out)},
                                                    {"variance", grid_summary(var, o->variance_out)}};
                                    s.stage_report(make_report(AnalysisKind::kriging, params, outputs, {o->points}),
                                                   o->report);
                                }
                            }});
    }
    {
        struct Opts {
            std::string points, attr = "z", control = "8x8", report, grid, out, svg;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*stats_cmd, "nurbs", "Bicubic NURBS surface fit (unit weights)");
        sub->add_option("--points", o->points, "Points CSV")->required();
        sub->add_option("--attr", o->attr, "Attribute")->capture_default_str();
        sub->add_option("--control", o->control, "Control net size NUxNV")->capture_default_str();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        sub->add_option("--grid", o->grid, "Evaluate on grid x0,y0,cellsize,ncols,nrows");
        sub->add_option("--out", o->out, "ASCII grid output for --grid");
        sub->add_option("--svg", o->svg, "SVG heatmap for --grid");
        commands.push_back({sub, [o](Session& s) {
                                if (o->grid.empty() != o->out.empty()) {
                                    throw UsageError("--grid and --out must be given together");
                                }
                                const auto [nu, nv] = parse_control(o->control);
                                if (nu < 4 || nv < 4) {
                                    throw UsageError("--control needs at least 4x4");
                                }
                                const auto pts = geodata::load_points(o->points);
                                const auto model = stats::fit_nurbs_surface(pts, nu, nv, o->attr);
                                json control = json::array();
                                for (std::size_t a = 0; a < model.nu; ++a) {
                                    json row = json::array();
                                    for (std::size_t b = 0; b < model.nv; ++b) {
                                        row.push_back(model.control_value(a, b));
                                    }
                                    control.push_back(row);
                                }
                                json outputs = {{"degree_u", model.degree_u},
                                                {"degree_v", model.degree_v},
                                                {"nu", model.nu},
                                                {"nv", model.nv},
                                                {"knots_u", model.knots_u},
                                                {"knots_v", model.knots_v},
                                                {"control", control},
                                                {"weights", model.weights},
                                                {"residual_rms", model.residual_rms}};
                                json params = {{"points", o->points}, {"attr", o->attr}, {"control", o->control}};
                                if (!o->grid.empty()) {
                                    const GridSpec spec = parse_grid_spec(o->grid);
                                    auto grid = RasterGrid::filled(spec, stats::kDefaultNodata, stats::kDefaultNodata);
                                    for (std::size_t r = 0; r < spec.nrows; ++r) {
                                        for (std::size_t c = 0; c < spec.ncols; ++c) {
                                            const auto p = spec.cell_center(r, c);
                                            if (p.x >= model.x_min() && p.x <= model.x_max() && p.y >= model.y_min() &&
                                                p.y <= model.y_max()) {
                                                grid.set(r, c, stats::evaluate_spline(model, p.x, p.y));
                                            }
                                        }
                                    }
                                    stage_grid(s, grid, o->out, o->svg);
                                    params["grid"] = grid_spec_json(spec);
                                    outputs["grid_summary"] = grid_summary(grid, o->out);
                                }
                                s.stage_report(make_report(AnalysisKind::nurbs, params, outputs, {o->points}),
                                               o->report);
                            }});
    }

    // ---- net -----------------------------------------------------------------
    CLI::App* net_cmd = add_command(app, "net", "3D network measurement and routing");
    net_cmd->require_subcommand(1);
    {
        struct Opts {
            std::string network, report;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*net_cmd, "indices", "beta, k, alpha and gamma indices");
        sub->add_option("--network", o->network, "Network JSON")->required();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto net = geodata::load_network(o->network);
                                const auto ix = network::measure_indices(net);
                                json outputs = {{"m", ix.m},
                                                {"n", ix.n},
                                                {"p_subgraphs", ix.p_subgraphs},
                                                {"beta", ix.beta},
                                                {"k_loops", ix.k_loops},
                                                {"alpha_paper", ix.alpha_paper},
                                                {"alpha_standard",
                                                 ix.alpha_standard ? json(*ix.alpha_standard) : json(nullptr)},
                                                {"gamma", ix.gamma}};
                                s.stage_report(make_report(AnalysisKind::network_indices, {{"network", o->network}},
                                                           outputs, {o->network}),
                                               o->report);
                            }});
    }
    {
        struct Opts {
            std::string network, from, to, report;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*net_cmd, "route", "Shortest indoor/outdoor route between two nodes");
        sub->add_option("--network", o->network, "Network JSON")->required();
        sub->add_option("--from", o->from, "Start node id")->required();
        sub->add_option("--to", o->to, "End node id")->required();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto net = geodata::load_network(o->network);
                                const auto route = network::indoor_outdoor_route(net, o->from, o->to);
                                s.stage_report(make_report(AnalysisKind::route,
                                                           {{"network", o->network}, {"from", o->from}, {"to", o->to}},
                                                           route_json(route), {o->network}),
                                               o->report);
                            }});
    }
    {
        struct Opts {
            std::string network, report;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*net_cmd, "components", "Connected components");
        sub->add_option("--network", o->network, "Network JSON")->required();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto net = geodata::load_network(o->network);
                                const auto comps = network::connectivity(net);
                                s.stage_report(make_report(AnalysisKind::components, {{"network", o->network}},
                                                           {{"count", comps.size()}, {"components", comps}},
                                                           {o->network}),
                                               o->report);
                            }});
    }
    {
        struct Opts {
            std::string network, node, report;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*net_cmd, "neighbors", "Nodes adjacent to a node");
        sub->add_option("--network", o->network, "Network JSON")->required();
        sub->add_option("--node", o->node, "Node id")->required();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto net = geodata::load_network(o->network);
                                const auto adj = network::neighbors(net, o->node);
                                s.stage_report(make_report(AnalysisKind::neighbors,
                                                           {{"network", o->network}, {"node", o->node}},
                                                           {{"neighbors", adj}}, {o->network}),
                                               o->report);
                            }});
    }

    // ---- geo -----------------------------------------------------------------
    CLI::App* geo_cmd = add_command(app, "geo", "Address matching against a standard address library");
    geo_cmd->require_subcommand(1);
    {
        struct Opts {
            std::string library, query, report;
            std::size_t top = 5;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*geo_cmd, "match", "Best-matching library records for a query");
        sub->add_option("--library", o->library, "Address CSV")->required();
        sub->add_option("--query", o->query, "Free-text address")->required();
        sub->add_option("--top", o->top, "Number of matches")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto lib = geodata::load_address_library(o->library);
                                const auto matches = network::geocode(lib, o->query, o->top);
                                json jm = json::array();
                                for (const auto& m : matches) {
                                    jm.push_back(match_json(m));
                                }
                                s.stage_report(
                                    make_report(AnalysisKind::geocode,
                                                {{"library", o->library}, {"query", o->query}, {"top", o->top}},
                                                {{"query_tokens", geodata::normalize_address(o->query)},
                                                 {"matches", jm}},
                                                {o->library}),
                                    o->report);
                            }});
    }
    {
        struct Opts {
            std::string library, network, from_addr, to_addr, report;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*geo_cmd, "route", "Geocode two addresses and route between them");
        sub->add_option("--library", o->library, "Address CSV")->required();
        sub->add_option("--network", o->network, "Network JSON")->required();
        sub->add_option("--from-addr", o->from_addr, "Start address")->required();
        sub->add_option("--to-addr", o->to_addr, "Destination address")->required();
        sub->add_option("--report", o->report, "JSON report path (default: stdout)");
        commands.push_back({sub, [o](Session& s) {
                                const auto lib = geodata::load_address_library(o->library);
                                const auto net = geodata::load_network(o->network);
                                const auto r = network::route_between_addresses(net, lib, o->from_addr, o->to_addr);
                                json outputs = route_json(r.route);
                                outputs["from_match"] = match_json(r.from);
                                outputs["to_match"] = match_json(r.to);
                                outputs["from_node"] = r.from_node;
                                outputs["to_node"] = r.to_node;
                                s.stage_report(make_report(AnalysisKind::address_route,
                                                           {{"library", o->library},
                                                            {"network", o->network},
                                                            {"from_addr", o->from_addr},
                                                            {"to_addr", o->to_addr}},
                                                           outputs, {o->library, o->network}),
                                               o->report);
                            }});
    }

    // ---- render --------------------------------------------------------------
    CLI::App* render_cmd = add_command(app, "render", "Schematic renderings of results");
    render_cmd->require_subcommand(1);
    {
        struct Opts {
            std::string grid, out;
        };
        auto o = std::make_shared<Opts>();
        CLI::App* sub = add_command(*render_cmd, "heatmap", "SVG heatmap of an ASCII grid");
        sub->add_option("--grid", o->grid, "Input ASCII grid")->required();
        sub->add_option("--out", o->out, "Output SVG")->required();
        commands.push_back({sub, [o](Session& s) {
                                s.stage_file(o->out, geodata::render_heatmap_svg(geodata::load_raster(o->grid)));
                            }});
    }

    std::vector<const char*> argv;
    argv.push_back("terra3d");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    const auto cmd = std::find_if(commands.begin(), commands.end(), [](const Command& c) { return c.app->parsed(); });
    if (cmd == commands.end()) {
        err << "terra3d: no command given; see --help\n";
        return kExitUsageError;
    }
    try {
        Session session;
        cmd->action(session);
        session.commit(out);
    } catch (const UsageError& e) {
        err << "terra3d: usage error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "terra3d: error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace terra3d::cli
