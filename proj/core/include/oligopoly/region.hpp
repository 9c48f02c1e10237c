#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "oligopoly/model.hpp"
#include "oligopoly/stability.hpp"
#include "oligopoly/tables.hpp"

namespace oligopoly {

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;

    double value(std::size_t i) const {
        if (count <= 1) return min;
        return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
};

struct GridSpec {
    GridAxis ksqrtc;  // values of k*sqrt(c)
    GridAxis l;       // adaptive weight, must stay within (0, 1]
    double c = 0.5;   // fixed cost coefficient; k is recovered as ksqrtc/sqrt(c)
};

/// Classification raster over the (k*sqrt(c), l) plane for one preset.
/// Cells are stored row-major with l as the slow axis:
/// cells[l_index * ksqrtc.count + k_index].
struct RegionGrid {
    Preset preset = Preset::Gb;
    GridSpec grid;
    std::vector<Verdict> cells;

    Verdict at(std::size_t k_index, std::size_t l_index) const {
        return cells[l_index * grid.ksqrtc.count + k_index];
    }
};

/// Verdict of the closed-form analysis at a single parameter-plane point.
Verdict classify_point(Preset preset, double ksqrtc, double l, double c);

/// Verdict implied by the closed-form threshold alone (boundary -> Marginal).
Verdict threshold_class(Preset preset, double ksqrtc, double l);

/// Classifies every grid node. Nodes are independent; `workers` threads
/// fill a preallocated raster in a strided pattern, so the result is
/// identical for any worker count. Throws std::invalid_argument for grid
/// bounds outside the domain (ksqrtc > 0, l in (0, 1], c > 0).
RegionGrid scan_plane(Preset preset, const GridSpec& grid, std::size_t workers = 1);

/// CSV document for one grid: header "ksqrtc,l,preset,class", one row per
/// node, 17-significant-digit coordinates, LF line endings.
std::string export_region_csv(const RegionGrid& grid);

/// Layered SVG with one layer per grid, stacked so that smaller (nested)
/// stable regions are drawn above larger ones. Axes are x = k*sqrt(c),
/// y = l. Static markup, no scripts.
std::string export_region_svg(std::span<const RegionGrid> grids);

/// Result of re-checking one published sample-point row.
struct TableRowResult {
    SamplePointRow row;
    std::vector<bool> exact;      // exact-rational condition booleans
    std::vector<bool> floating;   // double-path condition booleans
    bool matches_published;       // exact == printed pattern
    bool float_agrees;            // floating == exact
    bool schur_agrees;            // exact Schur-Cohn verdict == block verdict
    bool printed_strings_agree;   // published polynomial strings == derived values
    std::vector<std::string> exact_values;  // derived CD values as exact rationals
};

struct TableVerificationReport {
    std::vector<TableRowResult> rows;
    std::size_t mismatch_count = 0;      // rows whose pattern differs from print
    bool internally_consistent = false;  // float/schur/string cross-checks all agree
};

/// Evaluates every published sample-point row with exact rational
/// arithmetic (the radical substituted by its rational value) and compares
/// against the printed pattern. Pattern mismatches are findings about the
/// publication, not failures; cross-check failures are implementation bugs.
TableVerificationReport verify_tables();

}  // namespace oligopoly
