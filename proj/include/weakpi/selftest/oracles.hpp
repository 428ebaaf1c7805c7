#pragma once

// Brute-force reference computations used by the test suites and `selftest`.
// None of these call into the routine they are used to check.

#include <algorithm>
#include <functional>
#include <vector>

#include "weakpi/carray.hpp"
#include "weakpi/tableaux.hpp"

namespace weakpi::selftest {

/// Longest weakly increasing subsequence by trying every subset.
inline int brute_longest_weakly_increasing(const std::vector<int>& v) {
    const std::size_t n = v.size();
    int best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        int prev = 0, len = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            if (len > 0 && v[i] < prev) ok = false;
            prev = v[i];
            ++len;
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

/// Every c-array with 0..max_columns columns and entries in 1..max_entry.
inline std::vector<TwoRowArray> all_c_arrays(int max_columns, int max_entry) {
    std::vector<Column> pool;
    for (int a = 1; a <= max_entry; ++a)
        for (int b = 1; b < a; ++b) pool.push_back({a, b});
    std::sort(pool.begin(), pool.end());
    std::vector<TwoRowArray> out;
    std::vector<Column> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_columns) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Every raw array with exactly m columns and entries in 1..max_entry.
inline std::vector<TwoRowArray> all_raw_arrays(int m, int max_entry) {
    std::vector<TwoRowArray> out;
    std::vector<int> flat(2 * m, 1);
    for (;;) {
        std::vector<Column> cols;
        for (int k = 0; k < m; ++k) cols.push_back({flat[2 * k], flat[2 * k + 1]});
        out.emplace_back(std::move(cols));
        int i = 0;
        while (i < 2 * m && flat[i] == max_entry) flat[i++] = 1;
        if (i == 2 * m) break;
        ++flat[i];
    }
    return out;
}

/// Every filling of `shape` by 1..max_entry accepted by `keep`, found by
/// exhausting all max_entry^|shape| fillings.
inline std::vector<Tableau> brute_fillings(const Shape& shape, int max_entry,
                                           const std::function<bool(const Tableau&)>& keep) {
    std::vector<Tableau> out;
    const int n = shape.size();
    std::vector<int> flat(n, 1);
    for (;;) {
        std::vector<Tableau::Row> rows;
        int k = 0;
        for (int len : shape.parts()) {
            rows.emplace_back(flat.begin() + k, flat.begin() + k + len);
            k += len;
        }
        Tableau t(std::move(rows));
        if (keep(t)) out.push_back(std::move(t));
        int i = n - 1;
        while (i >= 0 && flat[i] == max_entry) flat[i--] = 1;
        if (i < 0) break;
        ++flat[i];
    }
    return out;
}

/// Every semistandard tableau with at most `max_cells` cells and entries in
/// 1..max_entry (empty tableau included).
inline std::vector<Tableau> all_ssyt(int max_cells, int max_entry, Convention conv) {
    std::vector<Tableau> out;
    for (int n = 0; n <= max_cells; ++n)
        for (const auto& shape : partitions_of(n))
            for_each_ssyt(shape, max_entry, conv, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

/// Double shapes (m1, m1, m2, m2, ...) with at most `max_cells` cells.
inline std::vector<Shape> double_shapes(int max_cells) {
    std::vector<Shape> out;
    for (int n = 0; 2 * n <= max_cells; ++n)
        for (const auto& mu : partitions_of(n)) {
            std::vector<int> parts;
            for (int p : mu.parts()) parts.insert(parts.end(), 2, p);
            out.emplace_back(std::move(parts));
        }
    return out;
}

/// Contents with entries in 0..2, nonzero last entry, length <= max_length
/// and total <= max_total.
inline std::vector<Content> contents_up_to_two(int max_length, int max_total) {
    std::vector<Content> out;
    std::vector<int> c;
    std::function<void(int)> rec = [&](int total) {
        if (!c.empty() && c.back() != 0) out.emplace_back(c);
        if (static_cast<int>(c.size()) == max_length) return;
        for (int e = 0; e <= 2 && total + e <= max_total; ++e) {
            c.push_back(e);
            rec(total + e);
            c.pop_back();
        }
    };
    out.emplace_back();
    rec(0);
    return out;
}

inline Content ones(int n) { return Content(std::vector<int>(n, 1)); }

inline Content ones_then_two(int l) {
    std::vector<int> c(l, 1);
    c.push_back(2);
    return Content(std::move(c));
}

}  // namespace weakpi::selftest
