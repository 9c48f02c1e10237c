#pragma once

#include <cstdio>
#include <string>

namespace oligopoly {

/// Shortest text that reproduces the double exactly on re-read; all
/// floating-point output uses this so runs are byte-reproducible on one
/// platform.
inline std::string g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace oligopoly
