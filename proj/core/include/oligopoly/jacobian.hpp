#pragma once

#include <cmath>
#include <stdexcept>

#include "oligopoly/dynamics.hpp"
#include "oligopoly/model.hpp"
#include "oligopoly/smallmat.hpp"

namespace oligopoly {

/// Each preset's canonical radical: the square root that makes every
/// Jacobian entry (and hence every stability condition) a polynomial in
/// (k, l, radical). The reference sample-point tables pick c so that this
/// radical is rational.
///   gb    -> sqrt(2c)      gba   -> sqrt(c)
///   gbal  -> sqrt(32c/3)   gbalr -> sqrt(25c/2)
double radical_from_c(Preset preset, double c);

namespace detail {

template <class T>
T frac(long long num, long long den) {
    return T(num) / T(den);
}

}  // namespace detail

/// Closed-form Jacobian at the interior equilibrium in the as-published
/// form, parameterized by the preset's canonical radical. See
/// jacobian_analytic for the double-precision wrapper and the note on the
/// five-firm third row.
template <class T>
SquareMatrix<T> jacobian_published(Preset preset, const T& k, const T& l, const T& radical) {
    using detail::frac;
    switch (preset) {
        case Preset::Gb: {
            // radical = sqrt(2c)
            SquareMatrix<T> j(2);
            j(0, 0) = T(1) - k * radical;
            return j;
        }
        case Preset::Gba: {
            // radical = sqrt(c)
            SquareMatrix<T> j(3);
            const T kr = k * radical;
            j(0, 0) = T(1) - frac<T>(10, 9) * kr;
            j(0, 1) = j(0, 2) = -kr / T(9);
            j(1, 0) = j(1, 2) = frac<T>(-1, 10);
            j(1, 1) = T(0);
            j(2, 0) = j(2, 1) = -l / T(10);
            j(2, 2) = T(1) - l;
            return j;
        }
        case Preset::Gbal: {
            // radical = sqrt(32c/3), so k*sqrt(6c) = 3*k*radical/4
            SquareMatrix<T> j(4);
            const T kr = k * radical;
            j(0, 0) = T(1) - frac<T>(9, 32) * kr;
            j(0, 1) = j(0, 2) = j(0, 3) = -kr / T(32);
            j(1, 0) = j(1, 2) = j(1, 3) = frac<T>(-1, 9);
            j(1, 1) = T(0);
            j(2, 0) = j(2, 1) = j(2, 3) = -l / T(9);
            j(2, 2) = T(1) - l;
            j(3, 0) = j(3, 1) = j(3, 2) = frac<T>(-1, 10);
            j(3, 3) = frac<T>(1, 10);
            return j;
        }
        case Preset::Gbalr: {
            // radical = sqrt(25c/2), so k*sqrt(2c) = 2*k*radical/5
            SquareMatrix<T> j(4);
            const T kr = k * radical;
            j(0, 0) = T(1) - frac<T>(31, 140) * kr;
            j(0, 1) = j(0, 2) = j(0, 3) = frac<T>(-3, 140) * kr;
            j(1, 0) = j(1, 2) = j(1, 3) = frac<T>(-75, 784);
            j(1, 1) = frac<T>(9, 784);
            j(2, 0) = j(2, 1) = j(2, 3) = T(0);
            j(2, 2) = T(1) - frac<T>(25, 28) * l;
            j(3, 0) = j(3, 1) = j(3, 2) = frac<T>(-5, 56);
            j(3, 3) = frac<T>(13, 168);
            return j;
        }
    }
    throw std::invalid_argument("unknown preset");
}

/// Closed-form Jacobian obtained by differentiating the step map itself.
/// Identical to jacobian_published except for the five-firm model, where
/// the published third row omits the chain-rule terms through the rational
/// firm's reply; the derivative of the map is
///   (-75l/784, -75l/784, 1 - 775l/784, -75l/784).
template <class T>
SquareMatrix<T> jacobian_derived_generic(Preset preset, const T& k, const T& l, const T& radical) {
    SquareMatrix<T> j = jacobian_published(preset, k, l, radical);
    if (preset == Preset::Gbalr) {
        using detail::frac;
        j(2, 0) = j(2, 1) = j(2, 3) = frac<T>(-75, 784) * l;
        j(2, 2) = T(1) - frac<T>(775, 784) * l;
    }
    return j;
}

/// The as-published closed-form Jacobian at the interior equilibrium.
///
/// Note: for the five-firm model the published third row disagrees with
/// the map's derivative (see jacobian_derived_generic); downstream
/// condition blocks and sample-point tables are reproduced from this
/// published form, while finite differences of step agree with
/// jacobian_derived. Use verify-paper to see the documented difference.
Matrix jacobian_analytic(Preset preset, double k, double l, double c);

/// Closed-form Jacobian of the step map (matches finite differences for
/// every preset).
Matrix jacobian_derived(Preset preset, double k, double l, double c);

/// Central finite differences of step around `point`; entry (i, j) is
/// d q_i(t+1) / d q_j(t). Probes that leave the map's domain raise
/// invalid_state_error.
Matrix jacobian_fd(const ModelSpec& model, const OutputVector& point, double h);

}  // namespace oligopoly
