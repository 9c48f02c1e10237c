#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "oligopoly/market.hpp"
#include "oligopoly/model.hpp"

namespace oligopoly {

/// Raised when the map is evaluated outside its domain (non-finite state,
/// non-positive total supply, or a firm facing negative rival supply).
class invalid_state_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class no_convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Advances the state by one period.
///
/// For models with a rational firm the state excludes that firm: its
/// current output r solves the same first-order cubic against the others'
/// current totals and is appended before the remaining firms update, and
/// the returned state again excludes it.
OutputVector step(const ModelSpec& model, const OutputVector& state);

/// The rational firm's reconstructed current-period output for this state.
double rational_output(const ModelSpec& model, const OutputVector& state);

enum class TrajectoryClass { ConvergedToFixedPoint, Cycle, Divergent, InvalidState, Undetermined };

std::string_view to_string(TrajectoryClass c);

struct Trajectory {
    std::vector<OutputVector> states;  // states[0] is the initial condition
    TrajectoryClass classification = TrajectoryClass::Undetermined;
    std::size_t cycle_period = 0;   // set when classification == Cycle
    std::size_t steps_used = 0;     // map applications performed
    std::size_t failure_step = 0;   // set when classification == InvalidState
};

/// Iterates the map and classifies the orbit.
///
/// Detection rules: ConvergedToFixedPoint after 10 consecutive steps moving
/// less than tol in max-norm; Cycle(p) when the state returns within tol of
/// the state p steps earlier (2 <= p <= 64, confirmed on two consecutive
/// steps, only while the per-step motion is >= tol); Divergent when any
/// coordinate exceeds 1e12 in magnitude or the total supply drops to <= 0;
/// InvalidState when the map itself leaves its domain; Undetermined when
/// max_steps expires first.
Trajectory simulate(const ModelSpec& model, const OutputVector& state0, std::size_t max_steps,
                    double tol);

/// The symmetric all-positive fixed point: every firm at
/// sqrt((n-1)/(2*c*n^2)) with n = n_firms(). For a model with a rational
/// firm the returned vector is the reduced state (that firm's coordinate is
/// implicit and equals the same value).
OutputVector interior_equilibrium(const ModelSpec& model);

/// Fixed points with the gradient firm shut down and the remaining n-1
/// firms at the symmetric (n-1)-firm value sqrt((n-2)/(2*c*(n-1)^2)).
/// Empty for the duopoly, which has no such equilibrium.
std::vector<OutputVector> boundary_equilibria(const ModelSpec& model);

/// Damped-Newton refinement of step(x) = x from a nearby guess. Returns a
/// point whose fixed-point residual is below tol in max-norm or throws
/// no_convergence_error.
OutputVector refine_fixed_point(const ModelSpec& model, const OutputVector& guess, double tol);

}  // namespace oligopoly
