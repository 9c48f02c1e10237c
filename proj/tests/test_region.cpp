#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "oligopoly/region.hpp"
#include "oligopoly/threshold.hpp"

using namespace oligopoly;

#ifndef OLIGOPOLY_SOURCE_DIR
#define OLIGOPOLY_SOURCE_DIR "."
#endif

TEST_CASE("duopoly scan splits exactly at sqrt(2)") {
    GridSpec grid;
    grid.ksqrtc = {0.1, 3.0, 120};
    grid.l = {0.5, 0.5, 1};
    grid.c = 0.5;
    const RegionGrid region = scan_plane(Preset::Gb, grid);
    const double spacing = (3.0 - 0.1) / 119.0;
    for (std::size_t i = 0; i < grid.ksqrtc.count; ++i) {
        const double ks = grid.ksqrtc.value(i);
        if (std::abs(ks - std::sqrt(2.0)) <= spacing) continue;  // boundary-adjacent
        CHECK(region.at(i, 0) == (ks < std::sqrt(2.0) ? Verdict::Stable : Verdict::Unstable));
    }
}

TEST_CASE("point classifications against the closed-form thresholds") {
    for (Preset preset : {Preset::Gb, Preset::Gba, Preset::Gbal, Preset::Gbalr})
        CHECK(classify_point(preset, 1.0, 0.5, 0.5) == Verdict::Stable);

    CHECK(classify_point(Preset::Gb, 2.0, 0.5, 0.5) == Verdict::Unstable);
    CHECK(classify_point(Preset::Gba, 2.0, 0.5, 0.5) == Verdict::Unstable);
    CHECK(classify_point(Preset::Gbal, 2.0, 0.5, 0.5) == Verdict::Stable);
    CHECK(classify_point(Preset::Gbalr, 2.0, 0.5, 0.5) == Verdict::Stable);

    CHECK(threshold_class(Preset::Gb, 2.0, 0.5) == Verdict::Unstable);
    CHECK(threshold_class(Preset::Gbal, 2.0, 0.5) == Verdict::Stable);
}

TEST_CASE("scan cells agree with the threshold away from the boundary") {
    GridSpec grid;
    grid.ksqrtc = {0.2, 2.8, 53};
    grid.l = {0.05, 1.0, 19};
    grid.c = 1.5;
    const double k_spacing = (2.8 - 0.2) / 52.0;
    for (Preset preset : {Preset::Gb, Preset::Gba, Preset::Gbal, Preset::Gbalr}) {
        const RegionGrid region = scan_plane(preset, grid);
        for (std::size_t lj = 0; lj < grid.l.count; ++lj) {
            const double l = grid.l.value(lj);
            const double bound = stability_threshold(preset, l);
            for (std::size_t ki = 0; ki < grid.ksqrtc.count; ++ki) {
                const double ks = grid.ksqrtc.value(ki);
                if (std::abs(ks - bound) <= k_spacing) continue;
                CHECK(region.at(ki, lj) == (ks < bound ? Verdict::Stable : Verdict::Unstable));
            }
        }
    }
}

TEST_CASE("stable regions nest across presets") {
    GridSpec grid;
    grid.ksqrtc = {0.1, 3.0, 60};
    grid.l = {0.02, 1.0, 25};
    grid.c = 0.5;
    const RegionGrid gb = scan_plane(Preset::Gb, grid);
    const RegionGrid gba = scan_plane(Preset::Gba, grid);
    const RegionGrid gbal = scan_plane(Preset::Gbal, grid);
    const RegionGrid gbalr = scan_plane(Preset::Gbalr, grid);
    for (std::size_t idx = 0; idx < gb.cells.size(); ++idx) {
        if (gb.cells[idx] == Verdict::Stable) CHECK(gba.cells[idx] == Verdict::Stable);
        if (gba.cells[idx] == Verdict::Stable) CHECK(gbal.cells[idx] == Verdict::Stable);
        if (gbal.cells[idx] == Verdict::Stable) CHECK(gbalr.cells[idx] == Verdict::Stable);
    }
}

TEST_CASE("scan is deterministic across worker counts") {
    GridSpec grid;
    grid.ksqrtc = {0.5, 2.5, 40};
    grid.l = {0.1, 1.0, 17};
    grid.c = 0.5;
    const std::string baseline = export_region_csv(scan_plane(Preset::Gbal, grid, 1));
    for (std::size_t workers : {2, 3, 8}) {
        CHECK(export_region_csv(scan_plane(Preset::Gbal, grid, workers)) == baseline);
    }
}

TEST_CASE("scan validates its domain") {
    GridSpec bad;
    bad.ksqrtc = {0.1, 1.0, 4};
    bad.l = {0.0, 1.0, 4};  // l = 0 excluded
    bad.c = 0.5;
    CHECK_THROWS_AS((void)scan_plane(Preset::Gba, bad), std::invalid_argument);
    bad.l = {0.1, 1.0, 4};
    bad.c = -1.0;
    CHECK_THROWS_AS((void)scan_plane(Preset::Gba, bad), std::invalid_argument);
}

TEST_CASE("CSV export shape") {
    GridSpec grid;
    grid.ksqrtc = {1.0, 2.0, 2};
    grid.l = {0.5, 1.0, 2};
    grid.c = 0.5;
    const std::string csv = export_region_csv(scan_plane(Preset::Gb, grid));
    std::istringstream lines(csv);
    std::string line;
    std::size_t count = 0;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "ksqrtc,l,preset,class");
    while (std::getline(lines, line)) ++count;
    CHECK(count == 4);
    CHECK(csv.find("\r") == std::string::npos);

    // empty grid: header only
    GridSpec empty;
    empty.ksqrtc = {1.0, 2.0, 0};
    empty.l = {0.5, 1.0, 0};
    empty.c = 0.5;
    CHECK(export_region_csv(scan_plane(Preset::Gb, empty)) == "ksqrtc,l,preset,class\n");
}

TEST_CASE("SVG export layers the four presets in nesting order") {
    GridSpec grid;
    grid.ksqrtc = {0.5, 2.8, 24};
    grid.l = {0.1, 1.0, 10};
    grid.c = 0.5;
    std::vector<RegionGrid> grids;
    for (Preset preset : {Preset::Gb, Preset::Gba, Preset::Gbal, Preset::Gbalr})
        grids.push_back(scan_plane(preset, grid));
    const std::string svg = export_region_svg(grids);
    const std::size_t pos_gbalr = svg.find("<g id=\"gbalr\"");
    const std::size_t pos_gbal = svg.find("<g id=\"gbal\"");
    const std::size_t pos_gba = svg.find("<g id=\"gba\"");
    const std::size_t pos_gb = svg.find("<g id=\"gb\"");
    REQUIRE(pos_gbalr != std::string::npos);
    REQUIRE(pos_gbal != std::string::npos);
    REQUIRE(pos_gba != std::string::npos);
    REQUIRE(pos_gb != std::string::npos);
    // the largest region is painted first, the smallest last (on top)
    CHECK(pos_gbalr < pos_gbal);
    CHECK(pos_gbal < pos_gba);
    CHECK(pos_gba < pos_gb);
    CHECK(svg.find("<script") == std::string::npos);
}

TEST_CASE("verify_tables reproduces the published patterns") {
    const TableVerificationReport report = verify_tables();
    REQUIRE(report.rows.size() == 33);
    CHECK(report.internally_consistent);

    // the single mismatch is the known fifth-condition entry of the last
    // published table at (12807/256, 251/256)
    CHECK(report.mismatch_count == 1);
    for (const TableRowResult& row : report.rows) {
        CAPTURE(row.row.table);
        CAPTURE(row.row.k_num);
        CHECK(row.float_agrees);
        CHECK(row.schur_agrees);
        CHECK(row.printed_strings_agree);
        if (row.matches_published) continue;
        CHECK(row.row.table == 3);
        CHECK(row.row.k_num == 12807);
        CHECK(row.row.l_num == 251);
        for (std::size_t i = 0; i < row.row.n_conditions; ++i) {
            if (i == 4)
                CHECK(row.exact[i] != row.row.expected[i]);
            else
                CHECK(row.exact[i] == row.row.expected[i]);
        }
    }
}

TEST_CASE("shipped fixture file matches the embedded rows") {
    std::ifstream in(std::string(OLIGOPOLY_SOURCE_DIR) + "/data/sample_points.json");
    REQUIRE(in.good());
    nlohmann::json doc;
    in >> doc;
    const auto rows = sample_point_rows();
    REQUIRE(doc.at("rows").size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& entry = doc.at("rows")[i];
        CHECK(entry.at("table").get<int>() == rows[i].table);
        CHECK(entry.at("preset").get<std::string>() == to_string(rows[i].preset));
        CHECK(entry.at("k")[0].get<long long>() == rows[i].k_num);
        CHECK(entry.at("k")[1].get<long long>() == rows[i].k_den);
        CHECK(entry.at("l")[0].get<long long>() == rows[i].l_num);
        CHECK(entry.at("l")[1].get<long long>() == rows[i].l_den);
        CHECK(entry.at("c")[0].get<long long>() == rows[i].c_num);
        CHECK(entry.at("c")[1].get<long long>() == rows[i].c_den);
        CHECK(entry.at("radical")[0].get<long long>() == rows[i].radical_num);
        CHECK(entry.at("radical")[1].get<long long>() == rows[i].radical_den);
        const auto expected = entry.at("expected").get<std::vector<bool>>();
        REQUIRE(expected.size() == rows[i].n_conditions);
        for (std::size_t j = 0; j < expected.size(); ++j)
            CHECK(expected[j] == rows[i].expected[j]);
    }
}
