#include "oligopoly/stability.hpp"

namespace oligopoly {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::Unstable: return "unstable";
        case Verdict::Marginal: return "marginal";
    }
    return "?";
}

}  // namespace oligopoly
