#include "oligopoly/market.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oligopoly {

OutputVector::OutputVector(std::vector<double> q) : q_(std::move(q)) {
    total_ = std::accumulate(q_.begin(), q_.end(), 0.0);
}

OutputVector::OutputVector(std::initializer_list<double> q)
    : OutputVector(std::vector<double>(q)) {}

bool OutputVector::all_finite() const {
    return std::all_of(q_.begin(), q_.end(), [](double x) { return std::isfinite(x); });
}

bool OutputVector::all_nonnegative() const {
    return std::all_of(q_.begin(), q_.end(), [](double x) { return x >= 0.0; });
}

double max_norm_distance(const OutputVector& a, const OutputVector& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

namespace {

void require_positive_total(const OutputVector& state) {
    if (!(state.total() > 0.0))
        throw std::domain_error("total supply must be positive (price undefined at Q <= 0)");
}

}  // namespace

double price(const OutputVector& state) {
    require_positive_total(state);
    return 1.0 / state.total();
}

double profit(const OutputVector& state, std::size_t i, const MarketParams& m) {
    require_positive_total(state);
    const double q = state[i];
    return q / state.total() - m.c * q * q;
}

double marginal_profit(const OutputVector& state, std::size_t i, const MarketParams& m) {
    require_positive_total(state);
    const double q = state[i];
    const double Q = state.total();
    return (Q - q) / (Q * Q) - 2.0 * m.c * q;
}

double best_response(double rival_supply, const MarketParams& m) {
    const double S = rival_supply;
    const double c = m.c;
    if (S < 0.0) throw std::domain_error("rival supply must be non-negative");
    if (S == 0.0) return 0.0;

    const auto foc = [&](double q) { return S - 2.0 * c * q * (S + q) * (S + q); };

    // f(0) = S > 0 and f is strictly decreasing; at hi = cbrt(S/(2c)) + S the
    // cubic term alone already exceeds S, so [0, hi] brackets the root.
    double lo = 0.0;
    double hi = std::cbrt(S / (2.0 * c)) + S;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (foc(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double q = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {  // Newton polish, derivative never vanishes on the bracket
        const double deriv = -2.0 * c * (S + q) * (S + 3.0 * q);
        const double next = q - foc(q) / deriv;
        if (next > lo && next < hi) q = next;
    }
    return q;
}

double lma_response(double rival_supply, double q_self, const MarketParams& m) {
    const double Q = rival_supply + q_self;
    return (2.0 * q_self + rival_supply) / (2.0 * (1.0 + m.c * Q * Q));
}

}  // namespace oligopoly
