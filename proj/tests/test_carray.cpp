#include <gtest/gtest.h>

#include "weakpi/carray.hpp"
#include "weakpi/selftest/oracles.hpp"

using namespace weakpi;

namespace {
TwoRowArray arr(std::vector<int> t, std::vector<int> b) { return TwoRowArray(t, b); }
}

TEST(TwoRowArray, RowsMustMatch) {
    EXPECT_THROW(arr({1, 2}, {1}), argument_error);
}

TEST(Classify, Conditions) {
    EXPECT_EQ(classify(arr({2, 4}, {1, 3})), ArrayClass::normal);
    EXPECT_EQ(classify(arr({4, 2}, {3, 1})), ArrayClass::raw);
    EXPECT_EQ(classify(arr({1}, {2})), ArrayClass::raw);
    EXPECT_EQ(classify(arr({2, 2, 2}, {1, 1, 1})), ArrayClass::c_array);
    EXPECT_EQ(classify(arr({4, 5, 6}, {1, 2, 3})), ArrayClass::c_array);
    EXPECT_EQ(classify(arr({4, 5, 6}, {3, 2, 1})), ArrayClass::normal);
    EXPECT_STREQ(to_string(ArrayClass::c_array), "c_array");
}

TEST(Classify, LongestWeaklyIncreasingMatchesBruteForce) {
    for (const auto& s : selftest::all_raw_arrays(4, 3))
        EXPECT_EQ(static_cast<int>(longest_weakly_increasing(s.bottom())),
                  selftest::brute_longest_weakly_increasing(s.bottom()));
}

TEST(Normalize, SignAndOrder) {
    const auto n = normalize(arr({1, 4}, {2, 3}));
    EXPECT_EQ(n.sign(), -1);
    EXPECT_EQ(n.array(), arr({2, 4}, {1, 3}));
    EXPECT_TRUE(normalize(arr({3, 2}, {3, 1})).is_zero());
    const auto m = normalize(arr({1, 3}, {2, 4}));
    EXPECT_EQ(m.sign(), 1);
    EXPECT_EQ(m.array(), arr({2, 4}, {1, 3}));
}

TEST(Order, LexicographicKey) {
    // a_m .. a_1 first, then b_1 .. b_m.
    EXPECT_TRUE(compare(arr({2, 4}, {1, 3}), arr({3, 4}, {1, 2})) < 0);
    EXPECT_TRUE(compare(arr({3, 4}, {1, 2}), arr({3, 4}, {2, 1})) < 0);
    EXPECT_TRUE(compare(arr({2, 5}, {1, 4}), arr({3, 4}, {1, 2})) > 0);
    EXPECT_THROW(compare(arr({2}, {1}), arr({2, 4}, {1, 3})), argument_error);
}

TEST(Star, MergesColumns) {
    EXPECT_EQ(star(arr({4}, {3}), arr({2}, {1})), arr({2, 4}, {1, 3}));
    EXPECT_THROW(star(arr({1}, {2}), arr({2}, {1})), contract_error);
}

TEST(EnumerateNormal, AgreesWithFilteringAllCArrays) {
    for (const auto& c : selftest::contents_up_to_two(6, 6)) {
        std::vector<TwoRowArray> brute;
        if (c.total() % 2 == 0)
            for (const auto& s : selftest::all_c_arrays(c.total() / 2, static_cast<int>(c.length())))
                if (is_normal(s) && content_of(s) == c) brute.push_back(s);
        auto fast = enumerate_normal(c);
        std::sort(fast.begin(), fast.end(), ArrayOrder{});
        std::sort(brute.begin(), brute.end(), ArrayOrder{});
        EXPECT_EQ(fast, brute);
    }
}

TEST(EnumerateNormal, SmallCases) {
    EXPECT_EQ(enumerate_normal(Content({1, 1})), (std::vector<TwoRowArray>{arr({2}, {1})}));
    EXPECT_EQ(enumerate_normal(Content({1, 1, 1, 1})).size(), 3u);
    EXPECT_TRUE(enumerate_normal(Content({1, 1, 1})).empty());
    EXPECT_TRUE(enumerate_normal(Content({3, 1})).empty());
}

TEST(EnumerateNormal, ReductionMaps) {
    // Doubled symbols pair off in even number; an odd leftover behaves as one extra doubled symbol.
    EXPECT_EQ(enumerate_normal(Content({2, 1, 2, 1})).size(), enumerate_normal(Content({1, 1})).size());
    EXPECT_EQ(enumerate_normal(Content({2, 1, 1})).size(), enumerate_normal(Content({1, 1, 2})).size());
    EXPECT_EQ(enumerate_normal(Content({1, 1, 1, 1, 2})).size(), enumerate_normal(Content({1, 1, 1, 1})).size());
}
