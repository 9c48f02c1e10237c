#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "oligopoly/charpoly.hpp"
#include "oligopoly/smallmat.hpp"

namespace oligopoly {

enum class Verdict { Stable, Unstable, Marginal };

std::string_view to_string(Verdict v);

/// Width of the band around zero inside which a strict inequality is
/// reported as marginal rather than decided (floating-point path only;
/// exact scalars use the true sign).
inline constexpr double marginal_band = 1e-12;

/// Sign of a condition value: +1, -1, or 0 when undecidable/marginal.
template <class T>
int condition_sign(const T& value) {
    if constexpr (std::is_floating_point_v<T>) {
        if (std::abs(value) <= marginal_band) return 0;
        return value > 0 ? 1 : -1;
    } else {
        if (value == T(0)) return 0;
        return value > T(0) ? 1 : -1;
    }
}

namespace detail {

inline Verdict verdict_from_signs(const std::vector<int>& signs) {
    bool any_marginal = false;
    bool all_positive = true;
    for (int s : signs) {
        if (s == 0) any_marginal = true;
        if (s <= 0) all_positive = false;
    }
    if (any_marginal) return Verdict::Marginal;
    return all_positive ? Verdict::Stable : Verdict::Unstable;
}

}  // namespace detail

/// Outcome of the unit-disk root test on a monic polynomial: the two
/// boundary evaluations A(1), (-1)^n A(-1) and the determinant pairs
/// D_i^+/D_i^- required by the criterion's parity rule.
template <class T>
struct SchurCohnReport {
    T at_one{};
    T at_minus_one_signed{};
    struct DeterminantPair {
        std::size_t index;
        T plus;
        T minus;
    };
    std::vector<DeterminantPair> determinants;
    Verdict verdict = Verdict::Marginal;

    bool stable() const { return verdict == Verdict::Stable; }
};

/// Evaluates all roots of `p` against the open unit disk. Stable means
/// every required quantity is strictly positive; any value at zero (or
/// inside the floating-point band) yields Marginal.
template <class T>
SchurCohnReport<T> schur_cohn(const CharPolynomial<T>& p) {
    const std::size_t n = p.degree();
    if (n < 1 || n > 5) throw std::invalid_argument("schur_cohn supports degrees 1..5");

    SchurCohnReport<T> report;
    report.at_one = p(T(1));
    const T at_minus_one = p(T(-1));
    report.at_minus_one_signed = (n % 2 == 0) ? at_minus_one : -at_minus_one;

    std::vector<int> signs{condition_sign(report.at_one), condition_sign(report.at_minus_one_signed)};

    // D_1, D_3, ... for even n; D_2, D_4, ... for odd n; both end at D_{n-1}.
    for (std::size_t i = (n % 2 == 0) ? 1 : 2; i + 1 <= n; i += 2) {
        SquareMatrix<T> upper(i), hankel(i);
        for (std::size_t r = 0; r < i; ++r) {
            for (std::size_t j = 0; j < i; ++j) {
                if (j < r)
                    upper(r, j) = T(0);
                else if (j == r)
                    upper(r, j) = T(1);
                else
                    upper(r, j) = p.a[n - (j - r)];
                const std::ptrdiff_t idx =
                    static_cast<std::ptrdiff_t>(i) - 1 - static_cast<std::ptrdiff_t>(r + j);
                hankel(r, j) = (idx >= 0) ? p.a[static_cast<std::size_t>(idx)] : T(0);
            }
        }
        typename SchurCohnReport<T>::DeterminantPair pair;
        pair.index = i;
        pair.plus = determinant(upper + hankel);
        pair.minus = determinant(upper - hankel);
        signs.push_back(condition_sign(pair.plus));
        signs.push_back(condition_sign(pair.minus));
        report.determinants.push_back(std::move(pair));
    }

    report.verdict = detail::verdict_from_signs(signs);
    return report;
}

/// A list of inequality values with the orientation each must satisfy.
template <class T>
struct ConditionBlock {
    std::string tag;
    std::vector<T> values;
    std::vector<int> required_signs;  // +1 for "> 0", -1 for "< 0"
    std::vector<bool> satisfied;
    Verdict verdict = Verdict::Marginal;

    bool all_satisfied() const { return verdict == Verdict::Stable; }
};

template <class T>
void finalize_condition_block(ConditionBlock<T>& block) {
    block.satisfied.clear();
    std::vector<int> oriented;
    for (std::size_t i = 0; i < block.values.size(); ++i) {
        const int s = condition_sign(block.values[i]) * block.required_signs[i];
        oriented.push_back(s);
        block.satisfied.push_back(s > 0);
    }
    block.verdict = detail::verdict_from_signs(oriented);
}

/// The closed-form stability inequalities for cubic and quartic
/// characteristic polynomials (four and six conditions respectively, all
/// oriented "> 0"). Equivalent to schur_cohn on the same polynomial.
template <class T>
ConditionBlock<T> corollary_conditions(const CharPolynomial<T>& p) {
    ConditionBlock<T> block;
    if (p.degree() == 3) {
        const T &a0 = p.a[0], &a1 = p.a[1], &a2 = p.a[2];
        block.tag = "corollary-3";
        block.values = {
            T(1) + a2 + a1 + a0,
            T(1) - a2 + a1 - a0,
            -a0 * a0 - a0 * a2 + a1 + T(1),
            -a0 * a0 + a0 * a2 - a1 + T(1),
        };
    } else if (p.degree() == 4) {
        const T &a0 = p.a[0], &a1 = p.a[1], &a2 = p.a[2], &a3 = p.a[3];
        block.tag = "corollary-4";
        block.values = {
            T(1) + a3 + a2 + a1 + a0,
            T(1) - a3 + a2 - a1 + a0,
            -a0 * a0 * a0 - a0 * a0 * a2 + a0 * a1 * a3 + a0 * a3 * a3 - a0 * a0 - a1 * a1 -
                a1 * a3 + a0 + a2 + T(1),
            a0 * a0 * a0 - a0 * a0 * a2 + a0 * a1 * a3 - a0 * a3 * a3 - a0 * a0 +
                T(2) * a0 * a2 - a1 * a1 + a1 * a3 - a0 - a2 + T(1),
            T(1) + a0,
            T(1) - a0,
        };
    } else {
        throw std::invalid_argument("corollary_conditions supports degrees 3 and 4 only");
    }
    block.required_signs.assign(block.values.size(), 1);
    finalize_condition_block(block);
    return block;
}

}  // namespace oligopoly
