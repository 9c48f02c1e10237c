#include "oligopoly/region.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "oligopoly/cdblock.hpp"
#include "oligopoly/charpoly.hpp"
#include "oligopoly/format.hpp"
#include "oligopoly/jacobian.hpp"
#include "oligopoly/rational.hpp"
#include "oligopoly/threshold.hpp"

namespace oligopoly {

Verdict classify_point(Preset preset, double ksqrtc, double l, double c) {
    const double k = ksqrtc / std::sqrt(c);
    return schur_cohn(char_poly(jacobian_analytic(preset, k, l, c))).verdict;
}

Verdict threshold_class(Preset preset, double ksqrtc, double l) {
    const double bound = stability_threshold(preset, l);
    if (std::abs(ksqrtc - bound) <= marginal_band) return Verdict::Marginal;
    return ksqrtc < bound ? Verdict::Stable : Verdict::Unstable;
}

RegionGrid scan_plane(Preset preset, const GridSpec& grid, std::size_t workers) {
    if (!(grid.c > 0.0)) throw std::invalid_argument("c: cost coefficient must be positive");
    if (grid.ksqrtc.count > 0 && !(grid.ksqrtc.min > 0.0))
        throw std::invalid_argument("ksqrtc: grid bounds must be positive");
    if (grid.l.count > 0 && !(grid.l.min > 0.0 && grid.l.max <= 1.0))
        throw std::invalid_argument("l: grid bounds must lie in (0, 1]");

    RegionGrid result;
    result.preset = preset;
    result.grid = grid;
    const std::size_t total = grid.ksqrtc.count * grid.l.count;
    result.cells.assign(total, Verdict::Marginal);
    if (total == 0) return result;

    const std::size_t n_workers = std::clamp<std::size_t>(workers, 1, total);
    const auto work = [&](std::size_t first) {
        for (std::size_t idx = first; idx < total; idx += n_workers) {
            const std::size_t k_index = idx % grid.ksqrtc.count;
            const std::size_t l_index = idx / grid.ksqrtc.count;
            result.cells[idx] = classify_point(preset, grid.ksqrtc.value(k_index),
                                               grid.l.value(l_index), grid.c);
        }
    };
    if (n_workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    return result;
}

std::string export_region_csv(const RegionGrid& grid) {
    std::string out = "ksqrtc,l,preset,class\n";
    for (std::size_t lj = 0; lj < grid.grid.l.count; ++lj) {
        for (std::size_t ki = 0; ki < grid.grid.ksqrtc.count; ++ki) {
            out += g17(grid.grid.ksqrtc.value(ki));
            out += ',';
            out += g17(grid.grid.l.value(lj));
            out += ',';
            out += to_string(grid.preset);
            out += ',';
            out += to_string(grid.at(ki, lj));
            out += '\n';
        }
    }
    return out;
}

namespace {

const char* preset_fill(Preset preset) {
    switch (preset) {
        case Preset::Gb: return "#d62728";
        case Preset::Gba: return "#f2c14e";
        case Preset::Gbal: return "#4f9d69";
        case Preset::Gbalr: return "#3b7dd8";
    }
    return "#888888";
}

}  // namespace

std::string export_region_svg(std::span<const RegionGrid> grids) {
    constexpr double width = 860.0, height = 540.0;
    constexpr double left = 70.0, right = 30.0, top = 40.0, bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double kmin = 0.0, kmax = 1.0, lmin = 0.0, lmax = 1.0;
    bool first = true;
    for (const RegionGrid& g : grids) {
        if (g.grid.ksqrtc.count == 0 || g.grid.l.count == 0) continue;
        if (first) {
            kmin = g.grid.ksqrtc.min;
            kmax = g.grid.ksqrtc.max;
            lmin = g.grid.l.min;
            lmax = g.grid.l.max;
            first = false;
        } else {
            kmin = std::min(kmin, g.grid.ksqrtc.min);
            kmax = std::max(kmax, g.grid.ksqrtc.max);
            lmin = std::min(lmin, g.grid.l.min);
            lmax = std::max(lmax, g.grid.l.max);
        }
    }
    const double kspan = (kmax > kmin) ? kmax - kmin : 1.0;
    const double lspan = (lmax > lmin) ? lmax - lmin : 1.0;
    const auto x_of = [&](double ks) { return left + (ks - kmin) / kspan * plot_w; };
    const auto y_of = [&](double l) { return top + (lmax - l) / lspan * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    // larger regions first so nested smaller ones stay visible on top
    std::vector<const RegionGrid*> ordered;
    for (const RegionGrid& g : grids) ordered.push_back(&g);
    std::stable_sort(ordered.begin(), ordered.end(), [](const RegionGrid* a, const RegionGrid* b) {
        return static_cast<int>(a->preset) > static_cast<int>(b->preset);
    });

    for (const RegionGrid* g : ordered) {
        const GridAxis& ka = g->grid.ksqrtc;
        const GridAxis& la = g->grid.l;
        const double dk = ka.count > 1 ? (ka.max - ka.min) / static_cast<double>(ka.count - 1)
                                       : kspan;
        const double dl = la.count > 1 ? (la.max - la.min) / static_cast<double>(la.count - 1)
                                       : lspan;
        svg << "<g id=\"" << to_string(g->preset) << "\" fill=\"" << preset_fill(g->preset)
            << "\" fill-opacity=\"0.9\">\n";
        for (std::size_t lj = 0; lj < la.count; ++lj) {
            std::size_t ki = 0;
            while (ki < ka.count) {
                if (g->at(ki, lj) != Verdict::Stable) {
                    ++ki;
                    continue;
                }
                std::size_t run_end = ki;
                while (run_end + 1 < ka.count && g->at(run_end + 1, lj) == Verdict::Stable)
                    ++run_end;
                const double x0 = x_of(ka.value(ki) - 0.5 * dk);
                const double x1 = x_of(ka.value(run_end) + 0.5 * dk);
                const double y0 = y_of(la.value(lj) + 0.5 * dl);
                const double y1 = y_of(la.value(lj) - 0.5 * dl);
                svg << "<rect x=\"" << g17(x0) << "\" y=\"" << g17(y0) << "\" width=\""
                    << g17(x1 - x0) << "\" height=\"" << g17(y1 - y0) << "\"/>\n";
                ki = run_end + 1;
            }
        }
        svg << "</g>\n";
    }

    svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
        << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
           "k&#183;&#8730;c</text>\n";
    svg << "<text x=\"20\" y=\"" << top + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\" "
           "transform=\"rotate(-90 20 "
        << top + plot_h / 2 << ")\">l</text>\n";
    svg << "<text x=\"" << left << "\" y=\"" << top - 12
        << "\" font-family=\"sans-serif\" font-size=\"13\">stable regions, nested: gb &#8838; "
           "gba &#8838; gbal &#8838; gbalr</text>\n";
    // axis extent labels
    svg << "<text x=\"" << left << "\" y=\"" << height - 40
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << g17(kmin)
        << "</text>\n";
    svg << "<text x=\"" << left + plot_w << "\" y=\"" << height - 40
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << g17(kmax)
        << "</text>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << top + plot_h
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << g17(lmin)
        << "</text>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << top + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << g17(lmax)
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

TableVerificationReport verify_tables() {
    TableVerificationReport report;
    report.internally_consistent = true;

    for (const SamplePointRow& row : sample_point_rows()) {
        TableRowResult result;
        result.row = row;

        const Rational k = make_rational(row.k_num, row.k_den);
        const Rational l = make_rational(row.l_num, row.l_den);
        const Rational radical = make_rational(row.radical_num, row.radical_den);

        const ConditionBlock<Rational> exact = cd_block_generic<Rational>(row.preset, k, l, radical);
        const auto schur =
            schur_cohn(char_poly(jacobian_published<Rational>(row.preset, k, l, radical)));

        const double kd = static_cast<double>(row.k_num) / static_cast<double>(row.k_den);
        const double ld = static_cast<double>(row.l_num) / static_cast<double>(row.l_den);
        const double cd = static_cast<double>(row.c_num) / static_cast<double>(row.c_den);
        const ConditionBlock<double> floating = cd_block(row.preset, kd, ld, cd);

        const std::vector<Rational> printed =
            cd_printed_strings<Rational>(row.preset, k, l, radical);
        const auto relation = cd_printed_relation(row.preset);

        result.matches_published = true;
        result.float_agrees = true;
        result.printed_strings_agree = true;
        for (std::size_t i = 0; i < row.n_conditions; ++i) {
            result.exact.push_back(exact.satisfied[i]);
            result.floating.push_back(floating.satisfied[i]);
            if (exact.satisfied[i] != row.expected[i]) result.matches_published = false;
            if (exact.satisfied[i] != floating.satisfied[i]) result.float_agrees = false;
            if (printed[i] * Rational(relation[i]) != exact.values[i])
                result.printed_strings_agree = false;
            std::ostringstream oss;
            oss << exact.values[i];
            result.exact_values.push_back(oss.str());
        }
        result.schur_agrees = schur.verdict == exact.verdict;

        if (!result.matches_published) ++report.mismatch_count;
        report.internally_consistent = report.internally_consistent && result.float_agrees &&
                                       result.schur_agrees && result.printed_strings_agree;
        report.rows.push_back(std::move(result));
    }
    return report;
}

}  // namespace oligopoly
