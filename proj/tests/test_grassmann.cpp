#include <gtest/gtest.h>

#include "weakpi/grassmann.hpp"
#include "weakpi/selftest/oracles.hpp"
#include "weakpi/straighten.hpp"

using namespace weakpi;

namespace {
TwoRowArray arr(std::vector<int> t, std::vector<int> b) { return TwoRowArray(t, b); }
GrassmannElem e(int g, int i) { return GrassmannElem::generator(g, i); }
}  // namespace

TEST(Grassmann, Anticommutation) {
    EXPECT_EQ(e(4, 1) * e(4, 2), rational(-1) * (e(4, 2) * e(4, 1)));
    EXPECT_TRUE((e(4, 3) * e(4, 3)).is_zero());
}

TEST(Grassmann, MonomialOrderSign) {
    EXPECT_EQ(GrassmannElem::monomial(4, {2, 1}, 1), rational(-1) * GrassmannElem::monomial(4, {1, 2}, 1));
    EXPECT_EQ(GrassmannElem::monomial(4, {3, 1, 2}, 1), GrassmannElem::monomial(4, {1, 2, 3}, 1));
}

TEST(Grassmann, Parity) {
    EXPECT_TRUE(GrassmannElem::scalar(4, 3).is_even());
    EXPECT_TRUE(e(4, 1).is_odd());
    EXPECT_FALSE((e(4, 1) + e(4, 1) * e(4, 2)).is_even());
    EXPECT_EQ(GrassmannElem::monomial(4, {1, 2, 3, 4}, -2).to_string(), "-2*e1e2e3e4");
}

TEST(M11, ParityEnforced) {
    const int g = 4;
    EXPECT_THROW(M11(e(g, 1), e(g, 2), e(g, 3), GrassmannElem(g)), parity_error);
    EXPECT_NO_THROW(M11::antidiag(e(g, 1), e(g, 2)));
}

TEST(M11, CentralElementsCommute) {
    WSampler s(8, 3);
    for (int k = 0; k < 20; ++k) {
        const M11 z = s.next_central();
        const M11 w = s.next();
        EXPECT_TRUE(commutator(z, w).is_zero());
    }
}

TEST(EvalArray, IgnoresCentralParts) {
    // Adding a central a*I to a substitution leaves every commutator unchanged.
    const int g = 12;
    WSampler s(g, 5);
    const auto sarr = arr({3, 4}, {1, 2});
    for (int k = 0; k < 10; ++k) {
        Assignment x, y;
        for (int v = 1; v <= 4; ++v) {
            const M11 w = s.next();
            x.emplace(v, w);
            y.emplace(v, w + s.next_central());
        }
        EXPECT_EQ(eval_array(sarr, x, g), eval_array(sarr, y, g));
    }
}

TEST(EvalArray, Errors) {
    Assignment a{{1, M11::identity(4)}};
    EXPECT_THROW(eval_array(arr({2}, {1}), a, 4), argument_error);
    a.emplace(2, M11(GrassmannElem::scalar(4, 1), GrassmannElem(4), GrassmannElem(4), GrassmannElem(4)));
    EXPECT_THROW(eval_array(arr({2}, {1}), a, 4), argument_error);
}

TEST(Verify, KnownIdentities) {
    EXPECT_TRUE(verify_weak_identity(identity_c3(), 30, 12, 11).holds);
    EXPECT_TRUE(verify_weak_identity(identity_p(), 30, 16, 11).holds);
    EXPECT_FALSE(verify_weak_identity(commutator_x1_x2(), 30, 8, 11).holds);
    EXPECT_THROW(verify_weak_identity(identity_p(), 1, 8, 1), argument_error);
}

TEST(Verify, NormalArraysAreNotIdentities) {
    // The sampler must be strong enough to see a nonzero normal f_S.
    const auto s = arr({3, 4, 6}, {2, 1, 5});
    ASSERT_TRUE(is_normal(s));
    const auto r = verify_weak_identity(array_difference(s, {}), 20, 12, 2);
    EXPECT_FALSE(r.holds);
}

TEST(Verify, StraighteningConsistentWithModel) {
    for (const auto& s : selftest::all_c_arrays(2, 4)) {
        if (s.empty() || !has_multiplicities_at_most_two(s)) continue;
        std::vector<std::pair<TwoRowArray, rational>> combo;
        const LinComb l = straighten(s);
        for (const auto& [x, c] : l.terms()) combo.push_back({x, c});
        const auto r = verify_weak_identity(array_difference(s, combo), 20, 12, 9);
        EXPECT_TRUE(r.holds) << s.top()[0];
    }
}

TEST(ScalarCheck, EmptyArrayGivesIdentity) {
    EXPECT_EQ(scalar_check_value(0), M11::identity(0));
}

TEST(ScalarCheck, ValuesAreSignedPowersOfTwo) {
    // The doubled staircase evaluates to (-2)^r u_1..u_2r v_1..v_2r * I.
    for (int r = 1; r <= 3; ++r) {
        const int g = 4 * r;
        std::vector<int> order;
        for (int i = 1; i <= g; ++i) order.push_back(i);
        const rational c = (r % 2 ? -1 : 1) * rational(1 << r);
        EXPECT_EQ(scalar_check_value(r), M11::scalar(g, GrassmannElem::monomial(g, order, c))) << "r=" << r;
        EXPECT_TRUE(scalar_check_value(r).is_scalar());
    }
}
