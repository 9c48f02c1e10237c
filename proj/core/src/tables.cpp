#include "oligopoly/tables.hpp"

namespace oligopoly {

namespace {

constexpr bool T = true;
constexpr bool F = false;

// Table 1: c = 1/4, radical sqrt(c) = 1/2.
// Table 2: c = 3/2, radical sqrt(32c/3) = 4.
// Table 3: c = 1/2, radical sqrt(25c/2) = 5/2.
constexpr std::array<SamplePointRow, 33> rows{{
    {1, Preset::Gba, 455, 256, 71, 256, 1, 4, 1, 2, 4, {T, T, T, T}},
    {1, Preset::Gba, 31, 8, 71, 256, 1, 4, 1, 2, 4, {T, F, T, T}},
    {1, Preset::Gba, 601, 128, 71, 256, 1, 4, 1, 2, 4, {T, F, F, T}},
    {1, Preset::Gba, 453, 256, 183, 256, 1, 4, 1, 2, 4, {T, T, T, T}},
    {1, Preset::Gba, 1439, 256, 183, 256, 1, 4, 1, 2, 4, {T, F, T, T}},
    {1, Preset::Gba, 1577, 16, 183, 256, 1, 4, 1, 2, 4, {T, F, F, T}},
    {1, Preset::Gba, 49855, 256, 183, 256, 1, 4, 1, 2, 4, {T, F, T, T}},
    {1, Preset::Gba, 25673, 128, 183, 256, 1, 4, 1, 2, 4, {T, F, T, F}},
    {1, Preset::Gba, 451, 256, 15, 16, 1, 4, 1, 2, 4, {T, T, T, T}},
    {1, Preset::Gba, 5237, 256, 15, 16, 1, 4, 1, 2, 4, {T, F, T, T}},
    {1, Preset::Gba, 2425, 64, 15, 16, 1, 4, 1, 2, 4, {T, F, T, F}},

    {2, Preset::Gbal, 55, 64, 109, 256, 3, 2, 4, 1, 6, {T, T, T, T, T, T}},
    {2, Preset::Gbal, 243, 128, 109, 256, 3, 2, 4, 1, 6, {T, F, T, T, T, T}},
    {2, Preset::Gbal, 301, 32, 109, 256, 3, 2, 4, 1, 6, {T, F, F, T, T, T}},
    {2, Preset::Gbal, 271, 16, 109, 256, 3, 2, 4, 1, 6, {T, F, T, T, T, T}},
    {2, Preset::Gbal, 5725, 64, 109, 256, 3, 2, 4, 1, 6, {T, F, T, F, T, T}},
    {2, Preset::Gbal, 20771, 128, 109, 256, 3, 2, 4, 1, 6, {T, F, T, F, T, F}},
    {2, Preset::Gbal, 109, 128, 119, 128, 3, 2, 4, 1, 6, {T, T, T, T, T, T}},
    {2, Preset::Gbal, 1275, 256, 119, 128, 3, 2, 4, 1, 6, {T, F, T, T, T, T}},
    {2, Preset::Gbal, 35405, 256, 119, 128, 3, 2, 4, 1, 6, {T, F, T, F, T, T}},
    {2, Preset::Gbal, 34413, 128, 119, 128, 3, 2, 4, 1, 6, {T, F, T, F, T, F}},

    {3, Preset::Gbalr, 453, 256, 61, 128, 1, 2, 5, 2, 6, {T, T, T, T, T, T}},
    {3, Preset::Gbalr, 1007, 256, 61, 128, 1, 2, 5, 2, 6, {T, F, T, T, T, T}},
    {3, Preset::Gbalr, 7183, 256, 61, 128, 1, 2, 5, 2, 6, {T, F, F, T, T, T}},
    {3, Preset::Gbalr, 6675, 128, 61, 128, 1, 2, 5, 2, 6, {T, F, T, T, T, T}},
    {3, Preset::Gbalr, 10587, 32, 61, 128, 1, 2, 5, 2, 6, {T, F, T, F, T, T}},
    {3, Preset::Gbalr, 9755, 16, 61, 128, 1, 2, 5, 2, 6, {T, F, T, F, T, F}},
    {3, Preset::Gbalr, 453, 256, 251, 256, 1, 2, 5, 2, 6, {T, T, T, T, T, T}},
    {3, Preset::Gbalr, 1567, 256, 251, 256, 1, 2, 5, 2, 6, {T, F, T, T, T, T}},
    {3, Preset::Gbalr, 225, 8, 251, 256, 1, 2, 5, 2, 6, {T, F, F, T, T, T}},
    {3, Preset::Gbalr, 12807, 256, 251, 256, 1, 2, 5, 2, 6, {T, F, T, T, F, T}},
    {3, Preset::Gbalr, 91267, 64, 251, 256, 1, 2, 5, 2, 6, {T, F, T, F, T, T}},
    {3, Preset::Gbalr, 89603, 32, 251, 256, 1, 2, 5, 2, 6, {T, F, T, F, T, F}},
}};

}  // namespace

std::span<const SamplePointRow> sample_point_rows() { return rows; }

}  // namespace oligopoly
