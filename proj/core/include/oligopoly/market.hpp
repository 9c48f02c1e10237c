#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace oligopoly {

/// Relative residual tolerance used by the first-order-condition solvers.
inline constexpr double response_rtol = 1e-12;

/// Market primitives: isoelastic demand p(Q) = 1/Q, quadratic cost c*q^2.
struct MarketParams {
    double c;  // cost coefficient, must be > 0
};

/// Per-firm output quantities with the total supply cached.
///
/// Quantities produced by user input are expected to be non-negative; the
/// iteration map may drive a gradient firm's output transiently negative,
/// so the container itself does not enforce a sign.
class OutputVector {
public:
    OutputVector() = default;
    explicit OutputVector(std::vector<double> q);
    OutputVector(std::initializer_list<double> q);

    std::size_t size() const { return q_.size(); }
    double operator[](std::size_t i) const { return q_[i]; }
    double total() const { return total_; }
    std::span<const double> values() const { return q_; }

    bool all_finite() const;
    bool all_nonnegative() const;

private:
    std::vector<double> q_;
    double total_ = 0.0;
};

/// Max-norm distance between two states of equal dimension.
double max_norm_distance(const OutputVector& a, const OutputVector& b);

/// p = 1/Q. Throws std::domain_error when Q <= 0 (demand undefined there).
double price(const OutputVector& state);

/// Profit of firm i: q_i/Q - c*q_i^2. Throws std::domain_error when Q <= 0.
double profit(const OutputVector& state, std::size_t i, const MarketParams& m);

/// d(profit_i)/d(q_i) = (Q - q_i)/Q^2 - 2*c*q_i. Throws std::domain_error when Q <= 0.
double marginal_profit(const OutputVector& state, std::size_t i, const MarketParams& m);

/// Best response to rivals' total supply S under naive expectations: the
/// unique root q >= 0 of S - 2c*q*(S+q)^2 = 0.
///
/// The left side is strictly decreasing in q with value S at q = 0, so the
/// root is bracketed by [0, cbrt(S/(2c)) + S]; bisection plus a Newton
/// polish meets response_rtol. S = 0 returns exactly 0.
double best_response(double rival_supply, const MarketParams& m);

/// One-step reply of a firm using a locally linearized demand estimate:
/// (2*q_self + S) / (2*(1 + c*(S + q_self)^2)). The denominator is >= 2.
double lma_response(double rival_supply, double q_self, const MarketParams& m);

}  // namespace oligopoly
