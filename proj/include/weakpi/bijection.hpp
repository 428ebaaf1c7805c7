#pragma once

#include <algorithm>
#include <vector>

#include "weakpi/carray.hpp"
#include "weakpi/error.hpp"
#include "weakpi/krs.hpp"
#include "weakpi/tableaux.hpp"

namespace weakpi {

/// c-array -> d-tableau. For each column (a_k, b_k) in order, b_k is
/// row-inserted and a_k is appended to the row just below the insertion row.
inline Tableau carray_to_dtableau(const TwoRowArray& s) {
    if (!is_c_array(s)) throw contract_error("carray_to_dtableau requires a c-array");
    Tableau t;
    for (const auto& c : s.columns()) {
        auto [next, i] = row_insert(t, c.bottom);
        auto rows = next.rows();
        if (static_cast<std::size_t>(i) == rows.size()) rows.emplace_back();
        rows[i].push_back(c.top);
        t = Tableau(std::move(rows));
    }
    return t;
}

/// d-tableau -> c-array, the inverse of carray_to_dtableau. Columns are
/// recovered from the last to the first: the maximal entry (taken at its
/// rightmost column) is row-deleted, the ejected value is its partner, and
/// the cell directly above the starting cell is dropped.
inline TwoRowArray dtableau_to_carray(const Tableau& t) {
    if (!is_d_tableau(t)) throw contract_error("dtableau_to_carray requires a d-tableau");
    auto cur = t;
    std::vector<Column> cols;
    while (!cur.empty()) {
        const auto& rows = cur.rows();
        int x = 0;
        std::size_t row = 0, col = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (rows[i][j] > x || (rows[i][j] == x && j >= col)) {
                    x = rows[i][j];
                    row = i;
                    col = j;
                }
        if (row == 0) throw contract_error("maximal entry in the first row of a d-tableau");

        auto [reduced, y] = row_delete(cur, static_cast<int>(row + 1));
        auto out = reduced.rows();
        auto& above = out[row - 1];
        // The maximal entry has been carried into the cell above its start,
        // which is always the last cell of that row.
        if (above.size() != col + 1 || above[col] != x)
            throw contract_error("cell above the deleted corner is not removable");
        above.pop_back();
        if (above.empty()) out.erase(out.begin() + static_cast<std::ptrdiff_t>(row - 1));
        cols.push_back({x, y});
        cur = Tableau(std::move(out));
    }
    std::reverse(cols.begin(), cols.end());
    return TwoRowArray(std::move(cols));
}

/// Length of the first row of carray_to_dtableau(s).
inline int first_row_length(const TwoRowArray& s) {
    const auto t = carray_to_dtableau(s);
    return t.empty() ? 0 : static_cast<int>(t.rows().front().size());
}

}  // namespace weakpi
