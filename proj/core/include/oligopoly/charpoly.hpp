#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "oligopoly/smallmat.hpp"

namespace oligopoly {

/// Monic characteristic polynomial lambda^n + a[n-1] lambda^{n-1} + ... + a[0].
template <class T>
struct CharPolynomial {
    std::vector<T> a;  // a[i] multiplies lambda^i; degree == a.size()

    std::size_t degree() const { return a.size(); }

    T operator()(const T& x) const {
        T value(1);
        for (std::size_t i = degree(); i-- > 0;) value = value * x + a[i];
        return value;
    }
};

using CharPoly = CharPolynomial<double>;

/// Coefficient extraction by the Faddeev-LeVerrier recurrence. The only
/// divisions are by the integers 2..n, so the result is exact over
/// rational scalars.
template <class T>
CharPolynomial<T> char_poly(const SquareMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0 || n > 5) throw std::invalid_argument("char_poly supports dimensions 1..5");

    CharPolynomial<T> p;
    p.a.assign(n, T(0));
    SquareMatrix<T> work = m;
    T coeff = -work.trace();
    p.a[n - 1] = coeff;
    for (std::size_t step = 2; step <= n; ++step) {
        work.add_scaled_identity(coeff);
        work = m * work;
        coeff = -work.trace() / T(static_cast<int>(step));
        p.a[n - step] = coeff;
    }
    return p;
}

}  // namespace oligopoly
