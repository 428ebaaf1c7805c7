#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weakpi/carray.hpp"
#include "weakpi/error.hpp"
#include "weakpi/poly.hpp"
#include "weakpi/rational.hpp"

// The invariant-ring model of the multilinear component: an array S on the
// labels {1..2m} maps to (-1)^S * q_S with q_ij = U_i U_j + V_i V_j.

namespace weakpi {

/// Variable indices in the ring F[U_i, V_i].
inline int u_var(int i) { return 2 * (i - 1); }
inline int v_var(int i) { return 2 * (i - 1) + 1; }

inline std::string uv_name(int var) {
    return (var % 2 == 0 ? "U" : "V") + std::to_string(var / 2 + 1);
}

/// Sign of the permutation 1 2 ... 2m -> a_1 b_1 ... a_m b_m.
inline int perm_sign(const TwoRowArray& s) {
    if (!has_standard_labels(s))
        throw contract_error("perm_sign requires entries exactly {1, ..., 2m}");
    std::vector<int> w;
    for (const auto& c : s.columns()) {
        w.push_back(c.top);
        w.push_back(c.bottom);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

namespace detail {

inline void require_multilinear(const TwoRowArray& s, const char* what) {
    if (!is_multilinear(s)) throw contract_error(std::string(what) + " requires a multilinear array");
}

template <class Factor>
Poly product_over_columns(const TwoRowArray& s, Factor factor) {
    Poly r(rational(1));
    for (const auto& c : s.columns()) r = r * factor(c.top, c.bottom);
    return r;
}

}  // namespace detail

/// q_ij = U_i U_j + V_i V_j.
inline Poly q_factor(int i, int j) {
    Poly r;
    r.add_term(Monomial::variable(u_var(i)) * Monomial::variable(u_var(j)), rational(1));
    r.add_term(Monomial::variable(v_var(i)) * Monomial::variable(v_var(j)), rational(1));
    return r;
}

/// U_i V_j + U_j V_i.
inline Poly p_factor(int i, int j) {
    Poly r;
    r.add_term(Monomial::variable(u_var(i)) * Monomial::variable(v_var(j)), rational(1));
    r.add_term(Monomial::variable(u_var(j)) * Monomial::variable(v_var(i)), rational(1));
    return r;
}

inline Poly q_poly(const TwoRowArray& s) {
    detail::require_multilinear(s, "q_poly");
    return detail::product_over_columns(s, q_factor);
}

inline Poly p_poly(const TwoRowArray& s) {
    detail::require_multilinear(s, "p_poly");
    return detail::product_over_columns(s, p_factor);
}

/// A formal rational combination of raw arrays.
using ArrayCombination = std::vector<std::pair<TwoRowArray, rational>>;

enum class PhiForm { q, p };

/// Sum of coeff * (-1)^S * q_S (or p_S). All arrays must be multilinear on
/// one common label set {1..2m}.
inline Poly phi(const ArrayCombination& combo, PhiForm form = PhiForm::q) {
    Poly r;
    std::size_t m = combo.empty() ? 0 : combo.front().first.size();
    for (const auto& [s, coeff] : combo) {
        if (s.size() != m || !has_standard_labels(s))
            throw argument_error("phi requires arrays multilinear on a common label set {1..2m}");
        Poly term = form == PhiForm::q ? q_poly(s) : p_poly(s);
        r += term * rational(coeff * perm_sign(s));
    }
    return r;
}

inline Poly phi(const TwoRowArray& s, PhiForm form = PhiForm::q) { return phi({{s, rational(1)}}, form); }

/// Rank over Q, by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
inline std::size_t exact_rank(const std::vector<std::vector<rational>>& matrix) {
    if (matrix.empty()) return 0;
    const std::size_t cols = matrix.front().size();
    std::vector<std::vector<integer>> a;
    for (const auto& row : matrix) {
        if (row.size() != cols) throw argument_error("ragged matrix");
        integer den = 1;
        for (const auto& q : row) den = lcm(den, integer(q.get_den()));
        std::vector<integer> r;
        for (const auto& q : row) r.push_back(integer(q.get_num() * (den / q.get_den())));
        a.push_back(std::move(r));
    }
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                integer v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                a[i][j] = v / prev;  // exact by Sylvester's identity
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Rank of the monomial-coefficient matrix of {phi(S_i)}.
inline std::size_t independence_rank(const std::vector<TwoRowArray>& arrays,
                                     PhiForm form = PhiForm::q) {
    std::vector<Poly> images;
    std::map<Monomial, std::size_t> column;
    for (const auto& s : arrays) {
        images.push_back(phi(s, form));
        for (const auto& [m, c] : images.back().terms()) column.try_emplace(m, column.size());
    }
    std::vector<std::vector<rational>> matrix(images.size(), std::vector<rational>(column.size()));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (const auto& [m, c] : images[i].terms()) matrix[i][column.at(m)] = c;
    return exact_rank(matrix);
}

}  // namespace weakpi
