#pragma once

#include <span>
#include <vector>

#include "oligopoly/model.hpp"

namespace oligopoly {

/// Published closed-form stability bound on k*sqrt(c) for the interior
/// equilibrium:
///   gb    : sqrt(2)
///   gba   : 9(101 l - 200) / (2(252 l - 505))
///   gbal  : 2 sqrt(6) (226 l - 441) / (512 l - 1017)
///   gbalr : 10172 sqrt(2) / 5737            (l plays no role)
/// l must lie in (0, 1] for gba and gbal and is ignored otherwise.
double stability_threshold(Preset preset, double l = 1.0);

/// Stability bound derived from the map's own Jacobian. Identical to
/// stability_threshold except for the five-firm model, whose corrected
/// third row gives the l-dependent bound
///   sqrt(2) (143425 l - 284816) / (2 (39925 l - 80318)),
/// equal to the published constant in the limit l -> 0 and decreasing to
/// about 2.47515 at l = 1.
double stability_threshold_derived(Preset preset, double l = 1.0);

struct ThresholdOrderingPoint {
    double l;
    double gb;
    double gba;
    double gbal;
    double gbalr;
    double min_margin;  // smallest gap between consecutive bounds
    bool strict;        // gb < gba < gbal < gbalr strictly
};

struct ThresholdOrderingReport {
    std::vector<ThresholdOrderingPoint> points;
    bool all_strict = false;
};

/// Checks sqrt(2) < gba(l) < gbal(l) < gbalr at each grid value of l and
/// reports the margins. Violations are reported, not thrown.
ThresholdOrderingReport threshold_ordering(std::span<const double> l_grid);

}  // namespace oligopoly
