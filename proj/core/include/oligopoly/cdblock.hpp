#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oligopoly/charpoly.hpp"
#include "oligopoly/jacobian.hpp"
#include "oligopoly/model.hpp"
#include "oligopoly/stability.hpp"

namespace oligopoly {

/// One signed rational scale factor: value = (num/den) * corollary condition.
struct CdScale {
    long long num;
    long long den;
};

/// Required sign of each CD value (+1 for "> 0", -1 for "< 0") and the
/// scale that maps the corollary condition onto the published normalization.
/// The sign of each scale equals the required sign, so "satisfied" always
/// means the underlying corollary condition is strictly positive.
std::span<const CdScale> cd_scales(Preset preset);
std::span<const int> cd_required_signs(Preset preset);
std::size_t cd_condition_count(Preset preset);

/// Relation of each published polynomial string to the derived CD value:
/// +1 when they agree identically, -1 where the published string carries a
/// flipped sign (the three-firm-table orientation is authoritative).
std::span<const int> cd_printed_relation(Preset preset);

/// Condition block in the published orientation, computed from the
/// corollary conditions of the published closed-form Jacobian and scaled to
/// the published normalization. Generic over the scalar; with a rational
/// radical this path is exact.
template <class T>
ConditionBlock<T> cd_block_generic(Preset preset, const T& k, const T& l, const T& radical) {
    if (preset == Preset::Gb)
        throw std::invalid_argument("cd_block is defined for gba, gbal and gbalr only");
    const SquareMatrix<T> j = jacobian_published(preset, k, l, radical);
    const ConditionBlock<T> base = corollary_conditions(char_poly(j));

    ConditionBlock<T> block;
    block.tag = std::string(to_string(preset));
    const auto scales = cd_scales(preset);
    const auto signs = cd_required_signs(preset);
    for (std::size_t i = 0; i < base.values.size(); ++i) {
        block.values.push_back(base.values[i] * T(scales[i].num) / T(scales[i].den));
        block.required_signs.push_back(signs[i]);
    }
    finalize_condition_block(block);
    return block;
}

/// The published CD polynomial strings transcribed verbatim, evaluated at
/// (k, l, radical). Regression fixtures only: cd_printed_relation flags the
/// one string whose printed sign disagrees with the published inequality
/// chain, and verify-paper compares these against the derived values.
template <class T>
std::vector<T> cd_printed_strings(Preset preset, const T& k, const T& l, const T& r) {
    const T k2 = k * k, k3 = k2 * k;
    const T l2 = l * l, l3 = l2 * l;
    const T r2 = r * r, r3 = r2 * r;
    switch (preset) {
        case Preset::Gba: {
            // r = sqrt(c); the printed c*k^2 terms equal k^2 r^2
            const T ck2 = k2 * r2;
            return {
                k * l * r,
                T(504) * k * l * r - T(1010) * k * r - T(909) * l + T(1800),
                T(324) * ck2 * l2 - T(18360) * ck2 * l + T(10100) * ck2 -
                    T(16524) * k * l2 * r - T(840420) * k * l * r + T(8181) * l2 +
                    T(891000) * k * r + T(801900) * l - T(1620000),
                T(36) * ck2 * l2 + T(1960) * ck2 * l + T(1764) * k * l2 * r - T(1100) * ck2 +
                    T(93420) * k * l * r - T(99000) * k * r - T(891) * l2 - T(89100) * l,
            };
        }
        case Preset::Gbal: {
            // r = sqrt(32c/3)
            return {
                k * l * r,
                (T(512) * k * l - T(1017) * k) * r - T(3616) * l + T(7056),
                (T(28672) * k3 * l3 - T(1062432) * k3 * l2 + T(9180054) * k3 * l -
                 T(12603681) * k3) * r3 +
                    (T(-3777536) * k2 * l3 + T(179157888) * k2 * l2 - T(1194862752) * k2 * l +
                     T(945483840) * k2) * r2 +
                    (T(116054016) * k * l3 - T(4248400896LL) * k * l2 -
                     T(5573546496LL) * k * l + T(13237426944LL) * k) * r -
                    T(566525952) * l3 + T(11952783360LL) * l2 + T(47066406912LL) * l -
                    T(133145026560LL),
                (T(3616) * k3 * l3 - T(132966) * k3 * l2 - T(512973) * k3 * l +
                 T(1226907) * k3) * r3 +
                    (T(-472768) * k2 * l3 + T(16419744) * k2 * l2 + T(77813136) * k2 * l -
                     T(83525904) * k2) * r2 +
                    (T(-6484992) * k * l3 + T(276668928) * k * l2 + T(1145829888) * k * l -
                     T(1868106240) * k) * r +
                    T(55148544) * l3 - T(1055932416) * l2 - T(6642155520LL) * l,
                (T(16) * k * l - T(27) * k) * r - T(96) * l - T(12816),
                (T(16) * k * l - T(27) * k) * r - T(96) * l + T(13104),
            };
        }
        case Preset::Gbalr: {
            // r = sqrt(25c/2)
            return {
                k * l * r,
                (T(25) * l - T(56)) * (T(5737) * k * r - T(50860)),
                (T(3934321875LL) * k3 * l3 - T(104905111500LL) * k3 * l2 +
                 T(1172129631120LL) * k3 * l - T(1186719653952LL) * k3) * r3 +
                    (T(-439562531250LL) * k2 * l3 + T(19054516460000LL) * k2 * l2 -
                     T(144796527937600LL) * k2 * l + T(134072666053760LL) * k2) * r2 +
                    (T(19706242500000LL) * k * l3 - T(579386747450000LL) * k * l2 -
                     T(1721529608680000LL) * k * l + T(3133067852544000LL) * k) * r -
                    T(113004562500000LL) * l3 + T(1975821995000000LL) * l2 +
                    T(12875890524000000LL) * l - T(37485773024000000LL),
                (T(9423) * k2 * r2 - T(981050) * k * r - T(33575000)) *
                    ((T(3375) * k * l3 - T(89180) * k * l2 - T(629552) * k * l +
                      T(812224) * k) * r -
                     T(22500) * l3 + T(343000) * l2 + T(3332000) * l),
                (T(225) * k * l - T(252) * k) * r - T(1500) * l - T(217840),
                (T(225) * k * l - T(252) * k) * r - T(1500) * l + T(221200),
            };
        }
        case Preset::Gb:
            throw std::invalid_argument("no published CD strings exist for gb");
    }
    throw std::invalid_argument("unknown preset");
}

/// Double-precision wrapper deriving the canonical radical from c.
ConditionBlock<double> cd_block(Preset preset, double k, double l, double c);

}  // namespace oligopoly
