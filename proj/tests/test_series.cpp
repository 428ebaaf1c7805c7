#include <gtest/gtest.h>

#include "weakpi/carray.hpp"
#include "weakpi/selftest/oracles.hpp"
#include "weakpi/series.hpp"

using namespace weakpi;

TEST(Series, ElementarySymmetric) {
    const auto e2 = elementary_symmetric(2, 3, 8);
    EXPECT_EQ(e2.coefficient({1, 1, 0}), 1);
    EXPECT_EQ(e2.coefficient({2, 0, 0}), 0);
    EXPECT_THROW(elementary_symmetric(4, 3, 8), argument_error);
}

TEST(Series, SchurSmall) {
    // s_(1,1)(t1,t2) = t1 t2; s_(2)(t1,t2) = t1^2 + t1 t2 + t2^2.
    EXPECT_EQ(schur(Shape({1, 1}), 2, 8).to_string(), "t1*t2");
    EXPECT_EQ(schur(Shape({2}), 2, 8).to_string(), "t1^2 + t1*t2 + t2^2");
}

TEST(Series, HilbertSpotValue) {
    EXPECT_EQ(carini_drensky(2, 8).to_string(), "1 + t1*t2 + t1^2*t2^2");
    EXPECT_EQ(carini_drensky(1, 8).to_string(), "1");
}

TEST(Series, ThreeWayAgreement) {
    for (int k = 1; k <= 3; ++k)
        for (int d : {4, 8}) {
            EXPECT_EQ(carini_drensky(k, d), hilbert_by_tableaux(k, d));
            EXPECT_EQ(hilbert_by_tableaux(k, d), hilbert_by_dimensions(k, d));
        }
}

TEST(Series, FourVariables) {
    EXPECT_EQ(carini_drensky(4, 6), hilbert_by_dimensions(4, 6));
}

TEST(Dimension, Formula) {
    EXPECT_EQ(dimension(Content({1, 1, 1, 1})), 3);
    EXPECT_EQ(dimension(Content({2, 2})), 1);
    EXPECT_EQ(dimension(Content({2})), 0);
    EXPECT_EQ(dimension(Content({1, 1, 1})), 0);
    EXPECT_EQ(dimension(Content({3, 1})), 0);
    EXPECT_EQ(dimension(Content({1, 1, 2})), 1);
    EXPECT_EQ(dimension(Content(std::vector<int>{})), 1);
}

TEST(Dimension, MatchesEnumeration) {
    for (const auto& c : selftest::contents_up_to_two(6, 8))
        EXPECT_EQ(dimension(c), integer(static_cast<long>(enumerate_normal(c).size())));
}

TEST(Gamma, Coefficients) {
    const auto g = gamma_coefficients(5);
    const long want[] = {1, 0, 1, 0, 3, 0, 10, 0, 35, 0, 126};
    for (int i = 0; i <= 10; ++i) EXPECT_EQ(g[i], want[i]) << "z^" << i;
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(9, 5), 126);
    EXPECT_EQ(binomial(3, 5), 0);
}
