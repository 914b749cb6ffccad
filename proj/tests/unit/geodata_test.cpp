#include <gtest/gtest.h>

#include <cmath>
#include <regex>

#include "support/oracles.hpp"
#include "terra3d/geodata.hpp"

using namespace terra3d;
using namespace terra3d::geodata;
using terra3d::testing::TempDir;
using terra3d::testing::fixture;
using terra3d::testing::slurp;
using terra3d::testing::write_text;

namespace {

std::string grid_text(const std::string& header_tail, const std::string& body) {
    return "ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\n" + header_tail + body;
}

template <typename Fn>
std::string error_of(Fn fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "<no error>";
}

}  // namespace

// ---- ASCII grid ---------------------------------------------------------------

TEST(AsciiGrid, ParsesTwoByTwo) {
    const auto g = parse_raster(grid_text("NODATA_value -9999\n", "1 2\n3 4\n"));
    EXPECT_EQ(g.ncols(), 2u);
    EXPECT_EQ(g.nrows(), 2u);
    EXPECT_EQ(std::vector<double>(g.values().begin(), g.values().end()), (std::vector<double>{1, 2, 3, 4}));
    EXPECT_DOUBLE_EQ(g.nodata_value(), -9999.0);
}

TEST(AsciiGrid, HeaderKeysAreCaseInsensitive) {
    const auto g = parse_raster("NCOLS 1\nNRows 1\nXLLCORNER 5\nyllCorner 6\nCellSize 2\nnodata_value -1\n7\n");
    EXPECT_DOUBLE_EQ(g.x_origin(), 5.0);
    EXPECT_DOUBLE_EQ(g.y_origin(), 6.0);
    EXPECT_DOUBLE_EQ(g.cellsize(), 2.0);
    EXPECT_DOUBLE_EQ(g.at(0, 0), 7.0);
}

TEST(AsciiGrid, NodataCellIsMissing) {
    const auto g = parse_raster(grid_text("NODATA_value -9999\n", "1 -9999\n3 4\n"));
    EXPECT_TRUE(g.is_missing(0, 1));
    EXPECT_FALSE(g.is_missing(0, 0));
    EXPECT_EQ(g.missing_count(), 1u);
}

TEST(AsciiGrid, ValueCountMismatch) {
    const std::string text = "ncols 3\nnrows 3\nxllcorner 0\nyllcorner 0\ncellsize 1\nNODATA_value -9999\n"
                             "1 2 3\n4 5 6\n7 8\n";
    EXPECT_NE(error_of([&] { parse_raster(text); }).find("value count mismatch"), std::string::npos);
}

TEST(AsciiGrid, MissingAndDuplicateHeaderKeys) {
    EXPECT_NE(error_of([] { parse_raster("ncols 2\nnrows 2\nxllcorner 0\ncellsize 1\nNODATA_value 0\n1 2 3 4\n"); })
                  .find("missing header key yllcorner"),
              std::string::npos);
    EXPECT_NE(error_of([] { parse_raster("ncols 2\nncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\n"); })
                  .find("duplicate header key"),
              std::string::npos);
    EXPECT_NE(error_of([] { parse_raster(grid_text("NODATA_value 0\ncellsize 1\n", "1 2 3 4\n")); })
                  .find("duplicate header key"),
              std::string::npos);
}

TEST(AsciiGrid, NonNumericCell) {
    EXPECT_NE(error_of([] { parse_raster(grid_text("NODATA_value -9999\n", "1 2\n3 abc\n")); }).find("non-numeric cell"),
              std::string::npos);
}

TEST(AsciiGrid, RejectsBadGeometry) {
    EXPECT_THROW(parse_raster("ncols 0\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\nNODATA_value 0\n"),
                 FormatError);
    EXPECT_THROW(parse_raster("ncols 1\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize -1\nNODATA_value 0\n5\n"),
                 FormatError);
}

TEST(AsciiGrid, CellCentersUseLowerLeftOrigin) {
    const auto g = RasterGrid::filled({100.0, 200.0, 10.0, 3, 2}, -9999, 0.0);
    const auto nw = g.cell_center(0, 0);
    EXPECT_DOUBLE_EQ(nw.x, 105.0);
    EXPECT_DOUBLE_EQ(nw.y, 215.0);
    const auto se = g.cell_center(1, 2);
    EXPECT_DOUBLE_EQ(se.x, 125.0);
    EXPECT_DOUBLE_EQ(se.y, 205.0);
}

TEST(AsciiGrid, SaveLoadRoundTrip) {
    TempDir dir("grid");
    RasterGrid g({0.5, -3.25, 2.0, 2, 2}, -9999, {1, 2, 3, 4});
    save_raster(g, dir / "g.asc");
    EXPECT_EQ(load_raster(dir / "g.asc"), g);
}

TEST(AsciiGrid, MissingCellsWrittenAsNodata) {
    RasterGrid g({0, 0, 1, 2, 1}, -32768, {std::nan(""), 5});
    EXPECT_NE(format_raster(g).find("\n-32768 5\n"), std::string::npos);
}

TEST(AsciiGrid, TenSignificantDigits) {
    TempDir dir("grid");
    RasterGrid g({0, 0, 1, 2, 1}, -9999, {0.1, 1.0 / 3.0});
    save_raster(g, dir / "g.asc");
    const auto back = load_raster(dir / "g.asc");
    EXPECT_LT(std::abs(back.at(0, 0) - 0.1) / 0.1, 1e-9);
    EXPECT_LT(std::abs(back.at(0, 1) - 1.0 / 3.0) / (1.0 / 3.0), 1e-9);
    EXPECT_NE(slurp(dir / "g.asc").find("0.1 0.3333333333\n"), std::string::npos);
}

TEST(AsciiGrid, SecondSaveIsByteIdentical) {
    TempDir dir("grid");
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> v(12);
        for (auto& x : v) x = u(rng);
        RasterGrid g({u(rng), u(rng), 0.37, 4, 3}, -9999, v);
        save_raster(g, dir / "a.asc");
        save_raster(load_raster(dir / "a.asc"), dir / "b.asc");
        save_raster(load_raster(dir / "b.asc"), dir / "c.asc");
        ASSERT_EQ(slurp(dir / "b.asc"), slurp(dir / "c.asc"));
    }
}

TEST(AsciiGrid, UnwritablePath) {
    RasterGrid g({0, 0, 1, 1, 1}, -9999, {1});
    EXPECT_THROW(save_raster(g, "/nonexistent-dir/for/sure/g.asc"), Error);
}

TEST(AsciiGrid, FixtureLoads) {
    const auto dem = load_raster(fixture("dem.asc"));
    EXPECT_EQ(dem.ncols(), 16u);
    EXPECT_EQ(dem.missing_count(), 1u);
}

// ---- points -------------------------------------------------------------------

TEST(Points, ParsesXyz) {
    const auto p = parse_points("x,y,z\n0,0,1\n1,0,2\n0,1,3\n");
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.attribute_names(), std::vector<std::string>{"z"});
    EXPECT_DOUBLE_EQ(p.attribute("z")[2], 3.0);
}

TEST(Points, ExtraColumnsBecomeAttributes) {
    const auto p = parse_points("temp,x,y,z\n10,0,0,1\n11,1,0,2\n");
    EXPECT_EQ(p.attribute_names(), (std::vector<std::string>{"z", "temp"}));
    EXPECT_DOUBLE_EQ(p.attribute("temp")[1], 11.0);
    EXPECT_DOUBLE_EQ(p[1].x, 1.0);
}

TEST(Points, Errors) {
    EXPECT_NE(error_of([] { parse_points("x,y,z\n0,0,1\n0,0,2\n"); }).find("duplicate planimetric coordinate"),
              std::string::npos);
    EXPECT_NE(error_of([] { parse_points("x,z\n0,1\n"); }).find("missing required column"), std::string::npos);
    EXPECT_NE(error_of([] { parse_points("x,y,z\n0,0\n"); }).find("ragged row"), std::string::npos);
    EXPECT_NE(error_of([] { parse_points("x,y,z\n0,0,q\n"); }).find("non-numeric"), std::string::npos);
    EXPECT_THROW((void)parse_points("x,y,z\n0,0,1\n").attribute("temp"), ArgumentError);
}

TEST(Points, ProgrammaticConstructionValidates) {
    EXPECT_THROW(PointSet3D({{0, 0, 1}, {0, 0, 2}}), FormatError);
    EXPECT_THROW(PointSet3D({{0, 0, 1}}, {{"a", {1.0, 2.0}}}), FormatError);
    EXPECT_THROW(PointSet3D({{0, 0, 1}}, {{"z", {1.0}}}), FormatError);
}

// ---- network ------------------------------------------------------------------

TEST(NetworkFile, DefaultsLengthToEuclidean3D) {
    const auto net = parse_network(R"({"nodes":[{"id":"A","x":0,"y":0,"z":0,"layer":"outdoor"},
        {"id":"B","x":3,"y":4,"z":0,"layer":"outdoor"}],
        "edges":[{"from":"A","to":"B","kind":"road"}]})");
    ASSERT_EQ(net.edge_count(), 1u);
    EXPECT_DOUBLE_EQ(net.edge(0).length, 5.0);
}

TEST(NetworkFile, ValidationErrors) {
    const std::string nodes = R"("nodes":[{"id":"A","x":0,"y":0,"z":0,"layer":"outdoor"},
        {"id":"B","x":1,"y":0,"z":0,"layer":"indoor"}])";
    EXPECT_NE(error_of([&] { parse_network("{" + nodes + R"(,"edges":[{"from":"A","to":"X9","kind":"road"}]})"); })
                  .find("dangling endpoint"),
              std::string::npos);
    EXPECT_NE(error_of([&] { parse_network("{" + nodes + R"(,"edges":[{"from":"A","to":"B","kind":"road"}]})"); })
                  .find("cross-layer edge must be connector"),
              std::string::npos);
    EXPECT_NE(error_of([&] {
                  parse_network("{" + nodes + R"(,"edges":[{"from":"A","to":"B","kind":"connector","length":-1}]})");
              }).find("negative length"),
              std::string::npos);
    EXPECT_NE(error_of([&] { parse_network("{" + nodes + R"(,"edges":[{"from":"A","to":"A","kind":"road"}]})"); })
                  .find("self-loop"),
              std::string::npos);
    EXPECT_THROW(parse_network("{\"nodes\":[]}"), FormatError);
    EXPECT_THROW(parse_network("not json"), FormatError);
}

TEST(NetworkFile, ParallelEdgesCollapseToShortest) {
    const auto net = parse_network(R"({"nodes":[{"id":"A","x":0,"y":0,"z":0,"layer":"outdoor"},
        {"id":"B","x":1,"y":0,"z":0,"layer":"outdoor"}],
        "edges":[{"from":"A","to":"B","kind":"road","length":4},{"from":"B","to":"A","kind":"road","length":2.5}]})");
    ASSERT_EQ(net.edge_count(), 1u);
    EXPECT_DOUBLE_EQ(net.edge(0).length, 2.5);
}

TEST(NetworkFile, FixtureCountsAndRoundTrip) {
    const auto net = load_network(fixture("net.json"));
    EXPECT_EQ(net.node_count(), 12u);
    EXPECT_EQ(net.edge_count(), 14u);
    TempDir dir("net");
    write_file_atomic(dir / "a.json", format_network(net));
    const auto again = load_network(dir / "a.json");
    EXPECT_EQ(format_network(again), format_network(net));
}

// ---- addresses ----------------------------------------------------------------

TEST(Addresses, Normalization) {
    EXPECT_EQ(normalize_address("12 Fuhua Road"), (std::vector<std::string>{"12", "fuhua", "road"}));
    EXPECT_EQ(normalize_address("  MAIN  st."), (std::vector<std::string>{"main", "st"}));
    EXPECT_EQ(normalize_address("Block-B,Room#2"), (std::vector<std::string>{"block", "b", "room", "2"}));
    EXPECT_TRUE(normalize_address(" ... ").empty());
}

TEST(Addresses, ParsesQuotedFieldsAndTokens) {
    const auto lib = parse_address_library("id,address,x,y,z\nA1,12 Fuhua Road,1,2,3\nA2,\"Civic Center, Block B\",0,0,0\n");
    ASSERT_EQ(lib.size(), 2u);
    EXPECT_EQ(lib.records()[0].tokens, (std::vector<std::string>{"12", "fuhua", "road"}));
    EXPECT_EQ(lib.records()[1].address, "Civic Center, Block B");
    EXPECT_DOUBLE_EQ(lib.records()[0].z, 3.0);
}

TEST(Addresses, Errors) {
    EXPECT_NE(error_of([] { parse_address_library("id,address,x,y,z\nA1,a,0,0,0\nA1,b,0,0,0\n"); }).find("duplicate id"),
              std::string::npos);
    EXPECT_NE(error_of([] { parse_address_library("id,address,x,y,z\nA1,,0,0,0\n"); }).find("empty address"),
              std::string::npos);
    EXPECT_THROW(parse_address_library("id,addr,x,y,z\n"), FormatError);
}

TEST(Addresses, FixtureLoads) {
    const auto lib = load_address_library(fixture("addresses.csv"));
    EXPECT_EQ(lib.size(), 9u);
}

// ---- report -------------------------------------------------------------------

TEST(Report, SerializesAndReloadsLosslessly) {
    AnalysisReport r;
    r.analysis = AnalysisKind::kriging;
    r.parameters = {{"model", "spherical"}, {"range", 0.1}, {"n", 3}};
    r.outputs = {{"values", {1.0 / 3.0, -2.5e-300, 1e300}}, {"missing", nullptr}};
    r.provenance = make_provenance({fixture("points.csv")});
    const auto text = format_report(r);
    const auto back = parse_report(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(format_report(back), text);
    EXPECT_EQ(r.provenance.inputs[0].sha256.size(), 64u);
}

TEST(Report, TopLevelKeys) {
    AnalysisReport r;
    const auto doc = nlohmann::json::parse(format_report(r));
    for (const char* key : {"analysis", "parameters", "outputs", "provenance"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
    EXPECT_THROW(parse_report(R"({"analysis":"slope"})"), FormatError);
    EXPECT_THROW(parse_report(R"({"analysis":"bogus","parameters":{},"outputs":{},"provenance":{"inputs":[],"timestamp":""}})"),
                 FormatError);
}

TEST(Report, DigestOfKnownContent) {
    TempDir dir("digest");
    write_text(dir / "abc.txt", "abc");
    EXPECT_EQ(file_sha256(dir / "abc.txt"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

// ---- heatmap ------------------------------------------------------------------

namespace {

std::vector<std::string> fills(const std::string& svg) {
    std::vector<std::string> out;
    const std::regex re("fill=\"([^\"]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        out.push_back((*it)[1]);
    }
    return out;
}

}  // namespace

TEST(Heatmap, UniformGridUsesMidpoint) {
    const auto svg = render_heatmap_svg(RasterGrid::filled({0, 0, 1, 3, 2}, -9999, 7.0));
    const auto f = fills(svg);
    ASSERT_EQ(f.size(), 6u);
    for (const auto& c : f) EXPECT_EQ(c, "#800080");
}

TEST(Heatmap, RampEndpoints) {
    const auto f = fills(render_heatmap_svg(RasterGrid({0, 0, 1, 2, 1}, -9999, {0, 1})));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], "#0000ff");
    EXPECT_EQ(f[1], "#ff0000");
}

TEST(Heatmap, MissingCellIsTransparent) {
    const auto full = fills(render_heatmap_svg(RasterGrid({0, 0, 1, 2, 2}, -9999, {1, 2, 3, 4})));
    const auto holed = fills(render_heatmap_svg(RasterGrid({0, 0, 1, 2, 2}, -9999, {1, -9999, 3, 4})));
    const auto opaque = [](const std::vector<std::string>& v) {
        return std::count_if(v.begin(), v.end(), [](const std::string& s) { return s != "none"; });
    };
    EXPECT_EQ(opaque(full), 4);
    EXPECT_EQ(opaque(holed), 3);
    EXPECT_EQ(holed.size(), 4u);
}

TEST(Heatmap, DimensionsProportionalToGrid) {
    const auto svg = render_heatmap_svg(RasterGrid::filled({0, 0, 1, 5, 3}, -9999, 1.0));
    EXPECT_NE(svg.find("width=\"50\" height=\"30\""), std::string::npos);
}

TEST(Heatmap, AllMissingIsAnError) {
    EXPECT_THROW(render_heatmap_svg(RasterGrid::filled({0, 0, 1, 2, 2}, -9999, -9999)), ArgumentError);
}
