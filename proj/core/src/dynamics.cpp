#include "oligopoly/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace oligopoly {

std::string_view to_string(TrajectoryClass c) {
    switch (c) {
        case TrajectoryClass::ConvergedToFixedPoint: return "ConvergedToFixedPoint";
        case TrajectoryClass::Cycle: return "Cycle";
        case TrajectoryClass::Divergent: return "Divergent";
        case TrajectoryClass::InvalidState: return "InvalidState";
        case TrajectoryClass::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

void check_dimension(const ModelSpec& model, const OutputVector& state) {
    if (state.size() != model.state_dimension())
        throw std::invalid_argument("state dimension does not match the model");
}

}  // namespace

double rational_output(const ModelSpec& model, const OutputVector& state) {
    if (!model.has_rational())
        throw std::invalid_argument("model has no rational firm");
    check_dimension(model, state);
    if (!(state.total() > 0.0))
        throw invalid_state_error("cannot reconstruct rational output at non-positive supply");
    return best_response(state.total(), model.market());
}

OutputVector step(const ModelSpec& model, const OutputVector& state) {
    check_dimension(model, state);
    if (!state.all_finite()) throw invalid_state_error("state contains a non-finite quantity");

    const MarketParams& m = model.market();
    double total = state.total();
    if (model.has_rational()) {
        if (!(total > 0.0))
            throw invalid_state_error("total supply is not positive");
        total += best_response(total, m);
    }
    const double Q = total;
    if (!(Q > 0.0) || !std::isfinite(Q))
        throw invalid_state_error("total supply is not positive");

    std::vector<double> next(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Mechanism& mech = model.mechanisms()[i];
        const double q = state[i];
        const double rivals = Q - q;
        double value = 0.0;
        switch (mech.kind) {
            case MechanismKind::Gradient:
                value = q + mech.k * q * (rivals / (Q * Q) - 2.0 * m.c * q);
                break;
            case MechanismKind::NaiveBestResponse:
                if (rivals < 0.0) throw invalid_state_error("negative rival supply");
                value = best_response(rivals, m);
                break;
            case MechanismKind::Adaptive:
                if (rivals < 0.0) throw invalid_state_error("negative rival supply");
                value = (1.0 - mech.l) * q + mech.l * best_response(rivals, m);
                break;
            case MechanismKind::Lma:
                value = lma_response(rivals, q, m);
                break;
            case MechanismKind::Rational:
                throw std::logic_error("rational firm cannot appear in the state");
        }
        if (!std::isfinite(value)) throw invalid_state_error("map produced a non-finite quantity");
        next[i] = value;
    }
    return OutputVector(std::move(next));
}

Trajectory simulate(const ModelSpec& model, const OutputVector& state0, std::size_t max_steps,
                    double tol) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    check_dimension(model, state0);

    constexpr double blow_up = 1e12;
    constexpr std::size_t quiet_needed = 10;
    constexpr std::size_t max_period = 64;

    Trajectory traj;
    traj.states.reserve(std::min<std::size_t>(max_steps + 1, 1 << 20));
    traj.states.push_back(state0);

    std::size_t quiet = 0;
    std::size_t pending_period = 0;
    OutputVector current = state0;

    for (std::size_t t = 0; t < max_steps; ++t) {
        OutputVector next;
        try {
            next = step(model, current);
        } catch (const invalid_state_error&) {
            traj.classification = TrajectoryClass::InvalidState;
            traj.failure_step = t;
            traj.steps_used = t;
            return traj;
        }
        traj.states.push_back(next);
        traj.steps_used = t + 1;

        bool exploded = false;
        for (std::size_t i = 0; i < next.size(); ++i)
            if (std::abs(next[i]) > blow_up) exploded = true;
        if (exploded || !(next.total() > 0.0)) {
            traj.classification = TrajectoryClass::Divergent;
            return traj;
        }

        const double motion = max_norm_distance(next, current);
        if (motion < tol) {
            if (++quiet >= quiet_needed) {
                traj.classification = TrajectoryClass::ConvergedToFixedPoint;
                return traj;
            }
            pending_period = 0;
        } else {
            quiet = 0;
            // Cycle scan against the recent history, shortest period first. A
            // candidate loop must have macroscopic diameter (some step inside
            // it moving >= 10 tol), otherwise a decaying oscillation that
            // revisits its lag-p neighbour would be mistaken for a cycle, and
            // must fire on two consecutive steps with the same period.
            const std::size_t now = traj.states.size() - 1;
            std::size_t found = 0;
            for (std::size_t p = 2; p <= max_period && p <= now; ++p) {
                if (max_norm_distance(traj.states[now], traj.states[now - p]) >= tol) continue;
                double diameter = 0.0;
                for (std::size_t s = now - p + 1; s <= now; ++s)
                    diameter = std::max(diameter,
                                        max_norm_distance(traj.states[s], traj.states[s - 1]));
                if (diameter >= 10.0 * tol) {
                    found = p;
                    break;
                }
            }
            if (found != 0 && found == pending_period) {
                traj.classification = TrajectoryClass::Cycle;
                traj.cycle_period = found;
                return traj;
            }
            pending_period = found;
        }
        current = next;
    }
    traj.classification = TrajectoryClass::Undetermined;
    return traj;
}

namespace {

double symmetric_equilibrium_value(std::size_t n_firms, double c) {
    const double n = static_cast<double>(n_firms);
    return std::sqrt((n - 1.0) / (2.0 * c * n * n));
}

}  // namespace

OutputVector interior_equilibrium(const ModelSpec& model) {
    const double value = symmetric_equilibrium_value(model.n_firms(), model.market().c);
    return OutputVector(std::vector<double>(model.state_dimension(), value));
}

std::vector<OutputVector> boundary_equilibria(const ModelSpec& model) {
    const std::size_t n = model.n_firms();
    if (n < 3) return {};  // the duopoly's equilibrium is unique

    const double value = symmetric_equilibrium_value(n - 1, model.market().c);
    std::vector<OutputVector> result;
    for (std::size_t i = 0; i < model.state_dimension(); ++i) {
        if (model.mechanisms()[i].kind != MechanismKind::Gradient) continue;
        std::vector<double> q(model.state_dimension(), value);
        q[i] = 0.0;
        result.emplace_back(std::move(q));
    }
    return result;
}

namespace {

// Gaussian elimination with partial pivoting; dimensions here never exceed 5.
bool solve_linear(std::vector<double> a, std::vector<double> b, std::size_t n,
                  std::vector<double>& x) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (std::abs(a[pivot * n + col]) < 1e-300) return false;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t j = ri + 1; j < n; ++j) s -= a[ri * n + j] * x[j];
        x[ri] = s / a[ri * n + ri];
    }
    return true;
}

std::vector<double> residual(const ModelSpec& model, const OutputVector& x) {
    const OutputVector fx = step(model, x);
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = fx[i] - x[i];
    return r;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
}

}  // namespace

OutputVector refine_fixed_point(const ModelSpec& model, const OutputVector& guess, double tol) {
    check_dimension(model, guess);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const std::size_t n = guess.size();
    std::vector<double> x(guess.values().begin(), guess.values().end());

    constexpr int max_iterations = 60;
    constexpr double fd_h = 1e-7;

    for (int it = 0; it < max_iterations; ++it) {
        OutputVector xv{std::vector<double>(x)};
        std::vector<double> f;
        try {
            f = residual(model, xv);
        } catch (const invalid_state_error&) {
            throw no_convergence_error("refinement left the map's domain");
        }
        if (max_abs(f) < tol) return xv;

        // Jacobian of step(x) - x by central differences
        std::vector<double> jac(n * n, 0.0);
        try {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<double> xp = x, xm = x;
                const double h = fd_h * std::max(1.0, std::abs(x[j]));
                xp[j] += h;
                xm[j] -= h;
                const OutputVector fp = step(model, OutputVector(std::move(xp)));
                const OutputVector fm = step(model, OutputVector(std::move(xm)));
                for (std::size_t i = 0; i < n; ++i)
                    jac[i * n + j] = (fp[i] - fm[i]) / (2.0 * h) - (i == j ? 1.0 : 0.0);
            }
        } catch (const invalid_state_error&) {
            throw no_convergence_error("finite-difference probe left the map's domain");
        }

        std::vector<double> delta;
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = -f[i];
        if (!solve_linear(jac, rhs, n, delta))
            throw no_convergence_error("singular Jacobian during refinement");

        // damped update: halve until the residual does not grow
        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 8; ++halving, lambda *= 0.5) {
            std::vector<double> trial(n);
            for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + lambda * delta[i];
            try {
                const std::vector<double> ft = residual(model, OutputVector(std::vector<double>(trial)));
                if (max_abs(ft) <= max_abs(f)) {
                    x = std::move(trial);
                    accepted = true;
                    break;
                }
            } catch (const invalid_state_error&) {
                continue;
            }
        }
        if (!accepted) throw no_convergence_error("refinement stalled");
    }
    throw no_convergence_error("fixed-point refinement hit the iteration cap");
}

}  // namespace oligopoly
