#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oligopoly {

/// Dense square matrix for the tiny systems handled here (n <= 5), generic
/// over the scalar so the same code runs in doubles and exact rationals.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t r, std::size_t col) { return a_[r * n_ + col]; }
    const T& operator()(std::size_t r, std::size_t col) const { return a_[r * n_ + col]; }

    SquareMatrix operator*(const SquareMatrix& rhs) const {
        SquareMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t kk = 0; kk < n_; ++kk) {
                const T& lik = (*this)(i, kk);
                for (std::size_t j = 0; j < n_; ++j) out(i, j) += lik * rhs(kk, j);
            }
        return out;
    }

    SquareMatrix operator+(const SquareMatrix& rhs) const {
        SquareMatrix out(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
        return out;
    }

    SquareMatrix operator-(const SquareMatrix& rhs) const {
        SquareMatrix out(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
        return out;
    }

    void add_scaled_identity(const T& s) {
        for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += s;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

/// Determinant by cofactor expansion along the first row; exact over
/// rational scalars and adequate at these dimensions.
template <class T>
T determinant(const SquareMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T det(0);
    for (std::size_t col = 0; col < n; ++col) {
        SquareMatrix<T> minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t mj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor(i - 1, mj++) = m(i, j);
            }
        }
        const T term = m(0, col) * determinant(minor);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

using Matrix = SquareMatrix<double>;

}  // namespace oligopoly
