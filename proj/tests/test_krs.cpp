#include <gtest/gtest.h>

#include "weakpi/krs.hpp"
#include "weakpi/selftest/oracles.hpp"

using namespace weakpi;

TEST(RowInsert, BumpsFirstLargerEntry) {
    const auto [t, row] = row_insert(Tableau({{1, 2, 4}, {3}}), 2);
    EXPECT_EQ(t, Tableau({{1, 2, 2}, {3, 4}}));
    EXPECT_EQ(row, 2);
}

TEST(RowInsert, AppendsNewRow) {
    const auto [t, row] = row_insert(Tableau({{2}, {3}}), 1);
    EXPECT_EQ(t, Tableau({{1}, {2}, {3}}));
    EXPECT_EQ(row, 3);
}

TEST(RowInsert, IntoEmpty) {
    const auto [t, row] = row_insert(Tableau(), 5);
    EXPECT_EQ(t, Tableau({Tableau::Row{5}}));
    EXPECT_EQ(row, 1);
}

TEST(RowInsert, RejectsNonSemistandard) {
    EXPECT_THROW(row_insert(Tableau({{2, 1}}), 1), contract_error);
}

TEST(RowDelete, InvalidCorner) {
    EXPECT_THROW(row_delete(Tableau({{1, 2}, {3, 4}}), 1), invalid_corner_error);
    EXPECT_THROW(row_delete(Tableau({{1, 2}}), 2), argument_error);
}

TEST(RowDelete, InvertsInsertExhaustively) {
    for (const auto& t : selftest::all_ssyt(6, 4, Convention::english))
        for (int x = 1; x <= 5; ++x) {
            const auto ins = row_insert(t, x);
            EXPECT_TRUE(is_semistandard_english(ins.tableau));
            const auto del = row_delete(ins.tableau, ins.row);
            EXPECT_EQ(del.tableau, t);
            EXPECT_EQ(del.value, x);
        }
}

TEST(RowInsert, DocumentedExamples) {
    EXPECT_EQ(row_insert(Tableau({{1}, {2}}), 3).tableau, Tableau({{1, 3}, {2}}));
    const auto ins = row_insert(Tableau({{1, 3}, {2}}), 1);
    EXPECT_EQ(ins.tableau, Tableau({{1, 1}, {2, 3}}));
    EXPECT_EQ(ins.row, 2);
    const auto del = row_delete(Tableau({{1, 1}, {2, 3}}), 2);
    EXPECT_EQ(del.tableau, Tableau({{1, 3}, {2}}));
    EXPECT_EQ(del.value, 1);
    EXPECT_EQ(row_delete(Tableau({{1, 3}, {2}}), 1).value, 3);
}

// Standard form of the bumping lemma: for x <= y the second new box is weakly
// above and strictly right of the first; for x > y it is strictly below and
// weakly left.
TEST(RowInsert, BumpingLemma) {
    for (const auto& t : selftest::all_ssyt(5, 5, Convention::english))
        for (int x = 1; x <= 5; ++x)
            for (int y = 1; y <= 5; ++y) {
                const auto [t1, i] = row_insert(t, x);
                const auto [t2, j] = row_insert(t1, y);
                const auto h = t1.rows()[i - 1].size();
                const auto k = t2.rows()[j - 1].size();
                if (x <= y) {
                    EXPECT_TRUE(j <= i && k > h);
                } else {
                    EXPECT_TRUE(j > i && k <= h);
                }
            }
}

TEST(RowInsert, SecondBoxBelowWhenSmaller) {
    // Inserting 2 then 1 into the empty tableau: the second box is in row 2.
    const auto [t1, i] = row_insert(Tableau(), 2);
    const auto [t2, j] = row_insert(t1, 1);
    EXPECT_EQ(i, 1);
    EXPECT_EQ(j, 2);
}
