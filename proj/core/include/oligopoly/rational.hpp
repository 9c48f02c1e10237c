#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace oligopoly {

/// Arbitrary-precision rational used by the exact evaluation path.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    return Rational(num) / Rational(den);
}

}  // namespace oligopoly
