#include "oligopoly/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oligopoly {

namespace {

void require_weight(Preset preset, double l) {
    if ((preset == Preset::Gba || preset == Preset::Gbal) && !(l > 0.0 && l <= 1.0))
        throw std::domain_error("l: adaptive weight must lie in (0, 1]");
}

}  // namespace

double stability_threshold(Preset preset, double l) {
    require_weight(preset, l);
    switch (preset) {
        case Preset::Gb: return std::sqrt(2.0);
        case Preset::Gba: return 9.0 * (101.0 * l - 200.0) / (2.0 * (252.0 * l - 505.0));
        case Preset::Gbal:
            return 2.0 * std::sqrt(6.0) * (226.0 * l - 441.0) / (512.0 * l - 1017.0);
        case Preset::Gbalr: return 10172.0 * std::sqrt(2.0) / 5737.0;
    }
    throw std::invalid_argument("unknown preset");
}

double stability_threshold_derived(Preset preset, double l) {
    if (preset == Preset::Gbalr) {
        if (!(l > 0.0 && l <= 1.0))
            throw std::domain_error("l: adaptive weight must lie in (0, 1]");
        return std::sqrt(2.0) * (143425.0 * l - 284816.0) / (2.0 * (39925.0 * l - 80318.0));
    }
    return stability_threshold(preset, l);
}

ThresholdOrderingReport threshold_ordering(std::span<const double> l_grid) {
    ThresholdOrderingReport report;
    report.all_strict = true;
    for (double l : l_grid) {
        ThresholdOrderingPoint p;
        p.l = l;
        p.gb = stability_threshold(Preset::Gb, l);
        p.gba = stability_threshold(Preset::Gba, l);
        p.gbal = stability_threshold(Preset::Gbal, l);
        p.gbalr = stability_threshold(Preset::Gbalr, l);
        p.min_margin = std::min({p.gba - p.gb, p.gbal - p.gba, p.gbalr - p.gbal});
        p.strict = p.min_margin > 0.0;
        report.all_strict = report.all_strict && p.strict;
        report.points.push_back(p);
    }
    return report;
}

}  // namespace oligopoly
