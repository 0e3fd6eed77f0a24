#pragma once

#include <stdexcept>
#include <vector>

#include "qcores/laurent.hpp"
#include "qcores/partition.hpp"

namespace qcores {

/*
 * Symplectic and odd orthogonal Schur functions as bialternant ratios:
 *
 *   sp_mu = det(x_j^{a_i} - x_j^{-a_i}) / det(x_j^{b_i} - x_j^{-b_i}),
 *   so_mu = det(x_j^{a_i} - x_j^{-(a_i-1)}) / det(x_j^{b_i} - x_j^{-(b_i-1)}),
 *
 * with a_i = mu_i + t - i + 1 and b_i = t - i + 1 (so's half powers already
 * cleared). Determinants are computed fraction-free (Bareiss) over the
 * Laurent ring; the final division must be exact or the formula is wrong.
 */

inline LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m, int nvars) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly::one(nvars);
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one(nvars);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return LaurentPoly(nvars);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace detail {

// exps[i] = exponent pair (pos, neg): entry (i, j) = x_j^{pos_i} - x_j^{-neg_i}
inline LaurentPoly alternant(const std::vector<std::pair<long, long>>& exps, int t) {
    std::vector<std::vector<LaurentPoly>> m(exps.size(),
                                            std::vector<LaurentPoly>(exps.size(), LaurentPoly(t)));
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = 0; j < exps.size(); ++j) {
            m[i][j] = LaurentPoly::variable(static_cast<int>(j), static_cast<int>(exps[i].first), t);
            m[i][j] -= LaurentPoly::variable(static_cast<int>(j),
                                             -static_cast<int>(exps[i].second), t);
        }
    return bareiss_det(std::move(m), t);
}

// Univariate version after the principal substitution x_j = q^j.
inline LaurentPoly alternant_principal(const std::vector<std::pair<long, long>>& exps) {
    const int n = static_cast<int>(exps.size());
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, LaurentPoly(1)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = LaurentPoly::variable(0, static_cast<int>((j + 1) * exps[i].first), 1);
            m[i][j] -= LaurentPoly::variable(0, -static_cast<int>((j + 1) * exps[i].second), 1);
        }
    return bareiss_det(std::move(m), 1);
}

inline std::vector<std::pair<long, long>> sp_exponents(const Partition& mu, int t) {
    if (mu.length() > t) throw std::invalid_argument("sp: partition longer than rank");
    std::vector<std::pair<long, long>> e;
    for (int i = 1; i <= t; ++i) {
        const long a = mu.part(i) + t - i + 1;
        e.push_back({a, a});
    }
    return e;
}

inline std::vector<std::pair<long, long>> so_exponents(const Partition& mu, int t) {
    if (mu.length() > t) throw std::invalid_argument("so_odd: partition longer than rank");
    std::vector<std::pair<long, long>> e;
    for (int i = 1; i <= t; ++i) {
        const long a = mu.part(i) + t - i + 1;
        e.push_back({a, a - 1});
    }
    return e;
}

}  // namespace detail

inline LaurentPoly sp(const Partition& mu, int t) {
    const auto num = detail::alternant(detail::sp_exponents(mu, t), t);
    const auto den = detail::alternant(detail::sp_exponents(Partition(), t), t);
    return exact_div(num, den);
}

inline LaurentPoly so_odd(const Partition& mu, int t) {
    const auto num = detail::alternant(detail::so_exponents(mu, t), t);
    const auto den = detail::alternant(detail::so_exponents(Partition(), t), t);
    return exact_div(num, den);
}

// sp_mu(q, q^2, ..., q^t) as a Laurent polynomial in q, computed directly
// from the specialized bialternant (same exact quotient, much smaller).
inline LaurentPoly principal_sp(const Partition& mu, int t) {
    const auto num = detail::alternant_principal(detail::sp_exponents(mu, t));
    const auto den = detail::alternant_principal(detail::sp_exponents(Partition(), t));
    return exact_div(num, den);
}

}  // namespace qcores
