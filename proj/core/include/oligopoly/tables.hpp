#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "oligopoly/model.hpp"

namespace oligopoly {

/// One published sample point with its printed condition pattern. All
/// numbers are exact rationals; `radical` is the preset's canonical radical
/// at this row's c (rational for every published row by construction).
struct SamplePointRow {
    int table;  // 1 = gba, 2 = gbal, 3 = gbalr
    Preset preset;
    long long k_num, k_den;
    long long l_num, l_den;
    long long c_num, c_den;
    long long radical_num, radical_den;
    std::size_t n_conditions;
    std::array<bool, 6> expected;  // printed true/false pattern, first n_conditions used
};

/// The 33 published sample-point rows (11 + 10 + 12).
std::span<const SamplePointRow> sample_point_rows();

}  // namespace oligopoly
