#include "oligopoly/model.hpp"

#include <stdexcept>

namespace oligopoly {

std::string_view to_string(MechanismKind kind) {
    switch (kind) {
        case MechanismKind::Gradient: return "gradient";
        case MechanismKind::NaiveBestResponse: return "best";
        case MechanismKind::Adaptive: return "adaptive";
        case MechanismKind::Lma: return "lma";
        case MechanismKind::Rational: return "rational";
    }
    return "?";
}

std::string_view to_string(Preset preset) {
    switch (preset) {
        case Preset::Gb: return "gb";
        case Preset::Gba: return "gba";
        case Preset::Gbal: return "gbal";
        case Preset::Gbalr: return "gbalr";
    }
    return "?";
}

std::optional<Preset> preset_from_string(std::string_view name) {
    if (name == "gb") return Preset::Gb;
    if (name == "gba") return Preset::Gba;
    if (name == "gbal") return Preset::Gbal;
    if (name == "gbalr") return Preset::Gbalr;
    return std::nullopt;
}

ModelSpec build_model(std::vector<Mechanism> mechanisms, MarketParams market) {
    if (mechanisms.size() < 2)
        throw std::invalid_argument("mechanisms: a model needs at least 2 firms");
    if (mechanisms.size() > 5)
        throw std::invalid_argument("mechanisms: at most 5 firms are supported");
    if (!(market.c > 0.0))
        throw std::invalid_argument("c: cost coefficient must be positive");

    std::size_t rational_count = 0;
    for (std::size_t i = 0; i < mechanisms.size(); ++i) {
        const Mechanism& mech = mechanisms[i];
        switch (mech.kind) {
            case MechanismKind::Gradient:
                if (!(mech.k > 0.0))
                    throw std::invalid_argument("k: gradient speed must be positive");
                break;
            case MechanismKind::Adaptive:
                if (!(mech.l > 0.0 && mech.l <= 1.0))
                    throw std::invalid_argument("l: adaptive weight must lie in (0, 1]");
                break;
            case MechanismKind::Rational:
                ++rational_count;
                if (rational_count > 1)
                    throw std::invalid_argument("mechanisms: at most one rational firm is allowed");
                if (i + 1 != mechanisms.size())
                    throw std::invalid_argument("mechanisms: a rational firm must be listed last");
                break;
            default:
                break;
        }
    }
    return ModelSpec(std::move(mechanisms), market, rational_count > 0);
}

namespace presets {

ModelSpec gb(double k, double c) {
    return build_model({Mechanism::gradient(k), Mechanism::naive_best_response()}, {c});
}

ModelSpec gba(double k, double l, double c) {
    return build_model(
        {Mechanism::gradient(k), Mechanism::naive_best_response(), Mechanism::adaptive(l)}, {c});
}

ModelSpec gbal(double k, double l, double c) {
    return build_model({Mechanism::gradient(k), Mechanism::naive_best_response(),
                        Mechanism::adaptive(l), Mechanism::lma()},
                       {c});
}

ModelSpec gbalr(double k, double l, double c) {
    return build_model({Mechanism::gradient(k), Mechanism::naive_best_response(),
                        Mechanism::adaptive(l), Mechanism::lma(), Mechanism::rational()},
                       {c});
}

ModelSpec make(Preset preset, double k, double l, double c) {
    switch (preset) {
        case Preset::Gb: return gb(k, c);
        case Preset::Gba: return gba(k, l, c);
        case Preset::Gbal: return gbal(k, l, c);
        case Preset::Gbalr: return gbalr(k, l, c);
    }
    throw std::invalid_argument("preset: unknown preset");
}

}  // namespace presets

std::optional<Preset> infer_preset(const ModelSpec& model) {
    static constexpr MechanismKind order[5] = {
        MechanismKind::Gradient, MechanismKind::NaiveBestResponse, MechanismKind::Adaptive,
        MechanismKind::Lma, MechanismKind::Rational};
    const auto& mechs = model.mechanisms();
    if (mechs.size() < 2 || mechs.size() > 5) return std::nullopt;
    for (std::size_t i = 0; i < mechs.size(); ++i)
        if (mechs[i].kind != order[i]) return std::nullopt;
    switch (mechs.size()) {
        case 2: return Preset::Gb;
        case 3: return Preset::Gba;
        case 4: return Preset::Gbal;
        case 5: return Preset::Gbalr;
    }
    return std::nullopt;
}

std::size_t preset_firm_count(Preset preset) {
    switch (preset) {
        case Preset::Gb: return 2;
        case Preset::Gba: return 3;
        case Preset::Gbal: return 4;
        case Preset::Gbalr: return 5;
    }
    return 0;
}

}  // namespace oligopoly
