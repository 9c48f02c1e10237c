#include "oligopoly/cdblock.hpp"

namespace oligopoly {

namespace {

// Scale factors carrying the corollary conditions onto the published CD
// normalization, derived once by polynomial division; each sign matches the
// published inequality orientation.
constexpr std::array<CdScale, 4> gba_scales{{{25, 27}, {450, 1}, {-810000, 1}, {-90000, 1}}};
constexpr std::array<CdScale, 6> gbal_scales{
    {{135, 32}, {1620, 1}, {68024448000LL, 1}, {-8503056000LL, 1}, {-12960, 1}, {12960, 1}}};
constexpr std::array<CdScale, 6> gbalr_scales{{{131712, 23125},
                                               {658560, 1},
                                               {-19041220716134400LL, 1},
                                               {-761648828645376LL, 5},
                                               {-219520, 1},
                                               {219520, 1}}};

constexpr std::array<int, 4> gba_signs{1, 1, -1, -1};
constexpr std::array<int, 6> gbal_signs{1, 1, 1, -1, -1, 1};
constexpr std::array<int, 6> gbalr_signs{1, 1, -1, -1, -1, 1};

// The published GBAL CD^3 string is the negative of the derived value; its
// sample-point table follows the derived orientation.
constexpr std::array<int, 4> gba_relation{1, 1, 1, 1};
constexpr std::array<int, 6> gbal_relation{1, 1, -1, 1, 1, 1};
constexpr std::array<int, 6> gbalr_relation{1, 1, 1, 1, 1, 1};

}  // namespace

std::span<const CdScale> cd_scales(Preset preset) {
    switch (preset) {
        case Preset::Gba: return gba_scales;
        case Preset::Gbal: return gbal_scales;
        case Preset::Gbalr: return gbalr_scales;
        case Preset::Gb: break;
    }
    throw std::invalid_argument("cd_block is defined for gba, gbal and gbalr only");
}

std::span<const int> cd_required_signs(Preset preset) {
    switch (preset) {
        case Preset::Gba: return gba_signs;
        case Preset::Gbal: return gbal_signs;
        case Preset::Gbalr: return gbalr_signs;
        case Preset::Gb: break;
    }
    throw std::invalid_argument("cd_block is defined for gba, gbal and gbalr only");
}

std::span<const int> cd_printed_relation(Preset preset) {
    switch (preset) {
        case Preset::Gba: return gba_relation;
        case Preset::Gbal: return gbal_relation;
        case Preset::Gbalr: return gbalr_relation;
        case Preset::Gb: break;
    }
    throw std::invalid_argument("cd_block is defined for gba, gbal and gbalr only");
}

std::size_t cd_condition_count(Preset preset) { return cd_required_signs(preset).size(); }

ConditionBlock<double> cd_block(Preset preset, double k, double l, double c) {
    return cd_block_generic<double>(preset, k, l, radical_from_c(preset, c));
}

}  // namespace oligopoly
