#include <gtest/gtest.h>

#include "weakpi/selftest/oracles.hpp"
#include "weakpi/tableaux.hpp"

using namespace weakpi;

TEST(Shape, RejectsNonPartitions) {
    EXPECT_THROW(Shape({1, 2}), shape_error);
    EXPECT_THROW(Shape({2, 0}), shape_error);
    EXPECT_NO_THROW(Shape({3, 3, 1}));
}

TEST(Shape, DoubleShapes) {
    EXPECT_TRUE(Shape({2, 2, 1, 1}).is_double());
    EXPECT_TRUE(Shape(std::vector<int>{}).is_double());
    EXPECT_FALSE(Shape({2, 1}).is_double());
    EXPECT_FALSE(Shape({2, 2, 1}).is_double());
}

TEST(Shape, TwoOne) {
    EXPECT_EQ(Shape::two_one(1, 1).parts(), (std::vector<int>{2, 2, 1, 1}));
    EXPECT_EQ(Shape::two_one(0, 2).parts(), (std::vector<int>{1, 1, 1, 1}));
}

TEST(Tableau, RaggedRowsAreNotAShape) {
    EXPECT_THROW(Tableau({{1}, {2, 3}}).shape(), shape_error);
}

TEST(Tableau, SemistandardConventions) {
    Tableau eng({{1, 1, 2}, {2, 3}});
    EXPECT_TRUE(is_semistandard_english(eng));
    EXPECT_FALSE(is_semistandard_french(eng));
    Tableau fr({{1, 2, 3}, {1, 2}});
    EXPECT_TRUE(is_semistandard_french(fr));
    EXPECT_FALSE(is_semistandard_english(fr));
    EXPECT_FALSE(is_semistandard_english(Tableau({{2, 1}})));
    EXPECT_FALSE(is_semistandard_english(Tableau({{1}, {1}})));
}

TEST(Tableau, DTableau) {
    EXPECT_TRUE(is_d_tableau(Tableau({{1, 3}, {2, 4}})));
    EXPECT_FALSE(is_d_tableau(Tableau({{1, 3}, {2}})));
    EXPECT_FALSE(is_d_tableau(Tableau({{1}, {2, 3}})));
    EXPECT_TRUE(is_d_tableau(Tableau()));
}

TEST(Tableau, Content) {
    EXPECT_EQ(content_of(Tableau({{1, 1, 3}, {3}})), Content({2, 0, 2}));
    EXPECT_EQ(Content({1, 2, 0, 0}), Content({1, 2}));
}

TEST(Enumerate, MatchesBruteForce) {
    for (auto conv : {Convention::english, Convention::french})
        for (int n = 0; n <= 5; ++n)
            for (const auto& shape : partitions_of(n)) {
                std::vector<Tableau> fast;
                for_each_ssyt(shape, 3, conv, [&](const Tableau& t) { fast.push_back(t); });
                auto slow = selftest::brute_fillings(shape, 3, [&](const Tableau& t) { return is_semistandard(t, conv); });
                std::sort(fast.begin(), fast.end());
                std::sort(slow.begin(), slow.end());
                EXPECT_EQ(fast, slow);
            }
}

TEST(Enumerate, ByContentIsLexicographicInReadingWord) {
    const auto ts = enumerate_ssyt(Shape({2, 1}), Content({1, 1, 1}), Convention::english);
    ASSERT_EQ(ts.size(), 2u);
    EXPECT_LT(ts[0].reading_word(), ts[1].reading_word());
    EXPECT_THROW(enumerate_ssyt(Shape({2, 1}), Content({1, 1}), Convention::english), argument_error);
}

TEST(Enumerate, KostkaNumbers) {
    // Standard tableaux of shape (3,2): 5; of shape (2,2,1,1) with content 1^6: 9.
    EXPECT_EQ(enumerate_ssyt(Shape({3, 2}), Content({1, 1, 1, 1, 1}), Convention::english).size(), 5u);
    EXPECT_EQ(enumerate_ssyt(Shape({2, 2, 1, 1}), Content({1, 1, 1, 1, 1, 1}), Convention::english).size(), 9u);
}

TEST(Partitions, Counts) {
    const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int n = 0; n < 8; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
}
