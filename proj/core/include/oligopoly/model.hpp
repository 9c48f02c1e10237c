#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oligopoly/market.hpp"

namespace oligopoly {

enum class MechanismKind { Gradient, NaiveBestResponse, Adaptive, Lma, Rational };

std::string_view to_string(MechanismKind kind);

/// One firm's decision rule. Gradient carries the adjustment speed k,
/// Adaptive carries the weight l; the other kinds have no parameters.
struct Mechanism {
    MechanismKind kind;
    double k = 0.0;
    double l = 0.0;

    static Mechanism gradient(double k) { return {MechanismKind::Gradient, k, 0.0}; }
    static Mechanism naive_best_response() { return {MechanismKind::NaiveBestResponse, 0.0, 0.0}; }
    static Mechanism adaptive(double l) { return {MechanismKind::Adaptive, 0.0, l}; }
    static Mechanism lma() { return {MechanismKind::Lma, 0.0, 0.0}; }
    static Mechanism rational() { return {MechanismKind::Rational, 0.0, 0.0}; }
};

/// The four model families with published closed-form stability analyses.
enum class Preset { Gb, Gba, Gbal, Gbalr };

std::string_view to_string(Preset preset);
std::optional<Preset> preset_from_string(std::string_view name);

/// An ordered list of firm mechanisms plus the shared market parameters.
///
/// A Rational firm has complete current-period information; its reply is
/// substituted into the map, so the iteration state excludes it and
/// state_dimension() == n_firms() - 1 for such models.
class ModelSpec {
public:
    const std::vector<Mechanism>& mechanisms() const { return mechanisms_; }
    const MarketParams& market() const { return market_; }

    std::size_t n_firms() const { return mechanisms_.size(); }
    bool has_rational() const { return has_rational_; }
    std::size_t state_dimension() const { return mechanisms_.size() - (has_rational_ ? 1 : 0); }

    friend ModelSpec build_model(std::vector<Mechanism> mechanisms, MarketParams market);

private:
    ModelSpec(std::vector<Mechanism> mechanisms, MarketParams market, bool has_rational)
        : mechanisms_(std::move(mechanisms)), market_(market), has_rational_(has_rational) {}

    std::vector<Mechanism> mechanisms_;
    MarketParams market_;
    bool has_rational_;
};

/// Validates and assembles a model. Throws std::invalid_argument when the
/// list is empty or longer than 5, has fewer than 2 firms, carries more
/// than one Rational firm or a Rational firm not in last position, or when
/// a parameter is out of range (k > 0, 0 < l <= 1, c > 0).
ModelSpec build_model(std::vector<Mechanism> mechanisms, MarketParams market);

namespace presets {
/// Duopoly: gradient vs naive best response.
ModelSpec gb(double k, double c);
/// Triopoly: gradient, naive best response, adaptive.
ModelSpec gba(double k, double l, double c);
/// Four firms: gradient, naive best response, adaptive, locally linearized reply.
ModelSpec gbal(double k, double l, double c);
/// Five firms: the four above plus a rational firm (reduced 4-D state).
ModelSpec gbalr(double k, double l, double c);

ModelSpec make(Preset preset, double k, double l, double c);
}  // namespace presets

/// Recognizes a model built exactly like one of the presets.
std::optional<Preset> infer_preset(const ModelSpec& model);

std::size_t preset_firm_count(Preset preset);

}  // namespace oligopoly
