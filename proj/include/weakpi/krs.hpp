#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "weakpi/error.hpp"
#include "weakpi/tableaux.hpp"

namespace weakpi {

struct Insertion {
    Tableau tableau;
    int row;  // 1-based row that received the new cell
};

struct Deletion {
    Tableau tableau;
    int value;  // entry ejected from the first row
};

/// Row insertion: x replaces the leftmost entry strictly greater than it in
/// row 1, the bumped entry goes to row 2, and so on until a value lands at
/// the end of a row (possibly a new one).
inline Insertion row_insert(const Tableau& t, int x) {
    if (x < 1) throw argument_error("inserted value must be positive");
    if (!is_semistandard_english(t))
        throw contract_error("row_insert requires a semistandard tableau");

    auto rows = t.rows();
    rows.emplace_back();
    std::size_t i = 0;
    for (;; ++i) {
        auto& r = rows[i];
        auto it = std::find_if(r.begin(), r.end(), [x](int v) { return v > x; });
        if (it == r.end()) {
            r.push_back(x);
            break;
        }
        std::swap(*it, x);
    }
    if (rows.back().empty()) rows.pop_back();
    return {Tableau(std::move(rows)), static_cast<int>(i + 1)};
}

/// Inverse of row_insert: removes the last cell of `row` and reverse-bumps
/// upward, each time replacing the rightmost entry strictly smaller than the
/// carried value. Requires lambda_row > lambda_{row+1}.
inline Deletion row_delete(const Tableau& t, int row) {
    if (!is_semistandard_english(t))
        throw contract_error("row_delete requires a semistandard tableau");
    const int r = static_cast<int>(t.row_count());
    if (row < 1 || row > r)
        throw argument_error("row index " + std::to_string(row) + " out of range 1.." +
                             std::to_string(r));
    auto rows = t.rows();
    const std::size_t below = row < r ? rows[row].size() : 0;
    if (rows[row - 1].size() <= below)
        throw invalid_corner_error("row " + std::to_string(row) +
                                   " does not end in a removable corner");

    int x = rows[row - 1].back();
    rows[row - 1].pop_back();
    for (int h = row - 1; h >= 1; --h) {
        auto& cur = rows[h - 1];
        auto it = std::find_if(cur.rbegin(), cur.rend(), [x](int v) { return v < x; });
        if (it == cur.rend()) break;
        std::swap(*it, x);
    }
    if (rows.back().empty()) rows.pop_back();
    return {Tableau(std::move(rows)), x};
}

}  // namespace weakpi
