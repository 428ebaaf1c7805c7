#include <gtest/gtest.h>

#include <random>

#include "weakpi/carray.hpp"
#include "weakpi/oracle.hpp"
#include "weakpi/selftest/oracles.hpp"

using namespace weakpi;

namespace {
TwoRowArray arr(std::vector<int> t, std::vector<int> b) { return TwoRowArray(t, b); }

// Row echelon over Q with plain fractions.
std::size_t naive_rank(std::vector<std::vector<rational>> a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            const rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}
}  // namespace

TEST(PermSign, Basic) {
    EXPECT_EQ(perm_sign(arr({1, 3}, {2, 4})), 1);
    EXPECT_EQ(perm_sign(arr({2, 4}, {1, 3})), 1);
    EXPECT_EQ(perm_sign(arr({2}, {1})), -1);
    EXPECT_THROW(perm_sign(arr({3}, {1})), contract_error);
}

TEST(Phi, SingleColumn) {
    // phi([[2],[1]]) = -(U1 U2 + V1 V2)
    Poly want;
    want.add_term(Monomial::variable(u_var(1)) * Monomial::variable(u_var(2)), rational(-1));
    want.add_term(Monomial::variable(v_var(1)) * Monomial::variable(v_var(2)), rational(-1));
    EXPECT_EQ(phi(arr({2}, {1})), want);
}

TEST(Phi, ColumnSwapFlipsSign) {
    for (const auto& s : selftest::all_raw_arrays(2, 4)) {
        if (!has_standard_labels(s)) continue;
        std::vector<Column> cols = s.columns();
        std::swap(cols[0].top, cols[0].bottom);
        Poly neg = phi(TwoRowArray(cols));
        neg *= rational(-1);
        EXPECT_EQ(phi(s), neg);
    }
}

TEST(Phi, ColumnOrderIrrelevant) {
    EXPECT_EQ(phi(arr({2, 4}, {1, 3})), phi(arr({4, 2}, {3, 1})));
}

TEST(Phi, RejectsMixedSupports) {
    EXPECT_THROW(phi(ArrayCombination{{arr({2}, {1}), 1}, {arr({2, 4}, {1, 3}), 1}}), argument_error);
}

TEST(ExactRank, MatchesNaiveElimination) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 3), den(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
        std::vector<std::vector<rational>> m(r, std::vector<rational>(c));
        for (auto& row : m)
            for (auto& x : row) x = rational(trial % 3 == 0 ? d(rng) % 2 : d(rng), den(rng));
        for (auto& row : m)
            for (auto& x : row) x.canonicalize();
        if (trial % 4 == 0 && r > 1) m[r - 1] = m[0];
        EXPECT_EQ(exact_rank(m), naive_rank(m));
    }
}

TEST(IndependenceRank, PAndQFormsAgree) {
    for (int m = 1; m <= 3; ++m) {
        const auto n = enumerate_normal(selftest::ones(2 * m));
        EXPECT_EQ(independence_rank(n, PhiForm::q), independence_rank(n, PhiForm::p));
    }
}

TEST(IndependenceRank, DetectsDependence) {
    auto n = enumerate_normal(selftest::ones(4));
    n.push_back(n.front());
    EXPECT_EQ(independence_rank(n), 3u);
}
