#include <gtest/gtest.h>

#include "weakpi/bijection.hpp"
#include "weakpi/selftest/oracles.hpp"

using namespace weakpi;

TEST(Bijection, SmallExample) {
    const TwoRowArray s({2, 4}, {1, 3});
    const Tableau t({{1, 3}, {2, 4}});
    EXPECT_EQ(carray_to_dtableau(s), t);
    EXPECT_EQ(dtableau_to_carray(t), s);
}

TEST(Bijection, Empty) {
    EXPECT_TRUE(carray_to_dtableau(TwoRowArray()).empty());
    EXPECT_TRUE(dtableau_to_carray(Tableau()).empty());
}

TEST(Bijection, ShapeIsDoubleAndContentPreserved) {
    for (const auto& s : selftest::all_c_arrays(3, 5)) {
        const auto t = carray_to_dtableau(s);
        EXPECT_TRUE(t.shape().is_double());
        EXPECT_EQ(content_of(t), content_of(s));
        EXPECT_EQ(dtableau_to_carray(t), s);
    }
}

TEST(Bijection, CountsMatchPerShape) {
    // c-arrays with m columns and entries <= 5 biject onto d-tableaux with 2m cells.
    for (int m = 0; m <= 3; ++m) {
        std::size_t arrays = 0, tableaux = 0;
        for (const auto& s : selftest::all_c_arrays(m, 5))
            if (static_cast<int>(s.size()) == m) ++arrays;
        for (const auto& shape : selftest::double_shapes(2 * m))
            if (shape.size() == 2 * m) for_each_ssyt(shape, 5, Convention::english, [&](const Tableau&) { ++tableaux; });
        EXPECT_EQ(arrays, tableaux) << "m=" << m;
    }
}

TEST(Bijection, FirstRowLength) {
    EXPECT_EQ(first_row_length(TwoRowArray({4, 5, 6}, {1, 2, 3})), 3);
    EXPECT_EQ(first_row_length(TwoRowArray({4, 5, 6}, {3, 2, 1})), 1);
    EXPECT_EQ(first_row_length(TwoRowArray()), 0);
}

TEST(Bijection, RejectsNonDTableau) {
    EXPECT_THROW(dtableau_to_carray(Tableau({{1, 2}})), contract_error);
}
