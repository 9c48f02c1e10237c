#include "oligopoly/jacobian.hpp"

namespace oligopoly {

double radical_from_c(Preset preset, double c) {
    switch (preset) {
        case Preset::Gb: return std::sqrt(2.0 * c);
        case Preset::Gba: return std::sqrt(c);
        case Preset::Gbal: return std::sqrt(32.0 * c / 3.0);
        case Preset::Gbalr: return std::sqrt(25.0 * c / 2.0);
    }
    throw std::invalid_argument("unknown preset");
}

Matrix jacobian_analytic(Preset preset, double k, double l, double c) {
    return jacobian_published<double>(preset, k, l, radical_from_c(preset, c));
}

Matrix jacobian_derived(Preset preset, double k, double l, double c) {
    return jacobian_derived_generic<double>(preset, k, l, radical_from_c(preset, c));
}

Matrix jacobian_fd(const ModelSpec& model, const OutputVector& point, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
    const std::size_t n = model.state_dimension();
    if (point.size() != n) throw std::invalid_argument("point dimension does not match the model");

    Matrix j(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> plus(point.values().begin(), point.values().end());
        std::vector<double> minus = plus;
        plus[col] += h;
        minus[col] -= h;
        const OutputVector fplus = step(model, OutputVector(std::move(plus)));
        const OutputVector fminus = step(model, OutputVector(std::move(minus)));
        for (std::size_t row = 0; row < n; ++row)
            j(row, col) = (fplus[row] - fminus[row]) / (2.0 * h);
    }
    return j;
}

}  // namespace oligopoly
