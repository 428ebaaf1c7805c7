#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "weakpi/error.hpp"
#include "weakpi/tableaux.hpp"

namespace weakpi {

/// One commutator [x_top, x_bottom].
struct Column {
    int top;
    int bottom;

    friend bool operator==(const Column&, const Column&) = default;
    // Left lexicographic order on (top, bottom).
    friend auto operator<=>(const Column&, const Column&) = default;
};

/// Two-rowed array of positive integers encoding the product of commutators
/// [x_a1, x_b1][x_a2, x_b2]...[x_am, x_bm]. Raw arrays need not be c-arrays.
class TwoRowArray {
public:
    TwoRowArray() = default;
    explicit TwoRowArray(std::vector<Column> columns) : columns_(std::move(columns)) {
        for (const auto& c : columns_)
            if (c.top < 1 || c.bottom < 1)
                throw argument_error("array entries must be positive integers");
    }
    TwoRowArray(const std::vector<int>& top, const std::vector<int>& bottom)
        : TwoRowArray(zip(top, bottom)) {}

    const std::vector<Column>& columns() const noexcept { return columns_; }
    std::size_t size() const noexcept { return columns_.size(); }
    bool empty() const noexcept { return columns_.empty(); }
    const Column& operator[](std::size_t i) const { return columns_[i]; }

    std::vector<int> top() const {
        std::vector<int> v;
        for (const auto& c : columns_) v.push_back(c.top);
        return v;
    }
    std::vector<int> bottom() const {
        std::vector<int> v;
        for (const auto& c : columns_) v.push_back(c.bottom);
        return v;
    }

    friend bool operator==(const TwoRowArray&, const TwoRowArray&) = default;

private:
    static std::vector<Column> zip(const std::vector<int>& top, const std::vector<int>& bottom) {
        if (top.size() != bottom.size())
            throw argument_error("array rows must have equal length");
        std::vector<Column> cols;
        for (std::size_t i = 0; i < top.size(); ++i) cols.push_back({top[i], bottom[i]});
        return cols;
    }

    std::vector<Column> columns_;
};

inline Content content_of(const TwoRowArray& s) {
    std::vector<int> counts;
    auto bump = [&](int v) {
        if (static_cast<std::size_t>(v) > counts.size()) counts.resize(v, 0);
        ++counts[v - 1];
    };
    for (const auto& c : s.columns()) {
        bump(c.top);
        bump(c.bottom);
    }
    return Content(std::move(counts));
}

/// No symbol occurs twice.
inline bool is_multilinear(const TwoRowArray& s) {
    const auto c = content_of(s);
    return std::all_of(c.counts().begin(), c.counts().end(), [](int n) { return n <= 1; });
}

/// Entries are exactly {1, ..., 2m}.
inline bool has_standard_labels(const TwoRowArray& s) { return content_of(s).is_multilinear(); }

// Conditions s1..s4.
inline bool has_descending_columns(const TwoRowArray& s) {
    return std::all_of(s.columns().begin(), s.columns().end(),
                       [](const Column& c) { return c.top > c.bottom; });
}

inline bool has_sorted_columns(const TwoRowArray& s) {
    return std::is_sorted(s.columns().begin(), s.columns().end());
}

inline bool has_multiplicities_at_most_two(const TwoRowArray& s) {
    const auto c = content_of(s);
    return std::all_of(c.counts().begin(), c.counts().end(), [](int n) { return n <= 2; });
}

/// Length of the longest weakly increasing subsequence of `v` (patience sorting).
inline std::size_t longest_weakly_increasing(const std::vector<int>& v) {
    std::vector<int> tails;
    for (int x : v) {
        auto it = std::upper_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return tails.size();
}

/// s4: no r < s < t with b_r <= b_s <= b_t.
inline bool avoids_increasing_triple(const TwoRowArray& s) {
    return longest_weakly_increasing(s.bottom()) < 3;
}

inline bool is_c_array(const TwoRowArray& s) {
    return has_descending_columns(s) && has_sorted_columns(s);
}

inline bool is_normal(const TwoRowArray& s) {
    return is_c_array(s) && has_multiplicities_at_most_two(s) && avoids_increasing_triple(s);
}

enum class ArrayClass { raw, c_array, normal };

inline ArrayClass classify(const TwoRowArray& s) {
    if (!is_c_array(s)) return ArrayClass::raw;
    return is_normal(s) ? ArrayClass::normal : ArrayClass::c_array;
}

inline const char* to_string(ArrayClass c) {
    switch (c) {
        case ArrayClass::raw: return "raw";
        case ArrayClass::c_array: return "c_array";
        case ArrayClass::normal: return "normal";
    }
    return "?";
}

/// Result of sign-tracked normalization: either zero (some column [x, x])
/// or +-1 times a c-array.
class SignedCArray {
public:
    static SignedCArray zero() { return SignedCArray(); }
    SignedCArray(int sign, TwoRowArray array) : sign_(sign), array_(std::move(array)) {}

    bool is_zero() const noexcept { return sign_ == 0; }
    int sign() const noexcept { return sign_; }
    const TwoRowArray& array() const noexcept { return array_; }

    friend bool operator==(const SignedCArray&, const SignedCArray&) = default;

private:
    SignedCArray() = default;
    int sign_ = 0;
    TwoRowArray array_;
};

/// Swap every ascending column (one sign flip per swap), then sort columns.
inline SignedCArray normalize(const TwoRowArray& s) {
    std::vector<Column> cols = s.columns();
    int sign = 1;
    for (auto& c : cols) {
        if (c.top == c.bottom) return SignedCArray::zero();
        if (c.top < c.bottom) {
            std::swap(c.top, c.bottom);
            sign = -sign;
        }
    }
    std::stable_sort(cols.begin(), cols.end());
    return {sign, TwoRowArray(std::move(cols))};
}

namespace detail {

inline std::vector<int> order_key(const TwoRowArray& s) {
    std::vector<int> key;
    key.reserve(2 * s.size());
    for (auto it = s.columns().rbegin(); it != s.columns().rend(); ++it) key.push_back(it->top);
    for (const auto& c : s.columns()) key.push_back(c.bottom);
    return key;
}

}  // namespace detail

/// Total order on arrays with m columns: lexicographic on
/// (a_m, ..., a_1, b_1, ..., b_m).
inline std::strong_ordering compare(const TwoRowArray& x, const TwoRowArray& y) {
    if (x.size() != y.size())
        throw argument_error("compare requires arrays with the same number of columns");
    const auto kx = detail::order_key(x);
    const auto ky = detail::order_key(y);
    return std::lexicographical_compare_three_way(kx.begin(), kx.end(), ky.begin(), ky.end());
}

/// Strict weak order for containers: fewer columns first, then `compare`.
struct ArrayOrder {
    bool operator()(const TwoRowArray& x, const TwoRowArray& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return compare(x, y) < 0;
    }
};

/// Juxtapose two c-arrays and re-sort the columns.
inline TwoRowArray star(const TwoRowArray& x, const TwoRowArray& y) {
    if (!is_c_array(x) || !is_c_array(y)) throw contract_error("star requires c-arrays");
    std::vector<Column> out;
    out.reserve(x.size() + y.size());
    std::merge(x.columns().begin(), x.columns().end(), y.columns().begin(), y.columns().end(),
               std::back_inserter(out));
    return TwoRowArray(std::move(out));
}

/// Every normal c-array of the given content, sorted by `compare`.
inline std::vector<TwoRowArray> enumerate_normal(const Content& content) {
    const auto& counts = content.counts();
    if (content.total() % 2 != 0) return {};
    if (std::any_of(counts.begin(), counts.end(), [](int n) { return n > 2; })) return {};

    // The largest unused symbol can only sit on top of a column; pair it with
    // every distinct smaller symbol still available.
    std::vector<int> left = counts;
    std::vector<Column> cols;
    std::set<TwoRowArray, ArrayOrder> found;
    auto rec = [&](auto&& self) -> void {
        int a = static_cast<int>(left.size());
        while (a > 0 && left[a - 1] == 0) --a;
        if (a == 0) {
            std::vector<Column> sorted = cols;
            std::sort(sorted.begin(), sorted.end());
            TwoRowArray s(std::move(sorted));
            if (avoids_increasing_triple(s)) found.insert(std::move(s));
            return;
        }
        --left[a - 1];
        for (int b = a - 1; b >= 1; --b) {
            if (left[b - 1] == 0) continue;
            --left[b - 1];
            cols.push_back({a, b});
            self(self);
            cols.pop_back();
            ++left[b - 1];
        }
        ++left[a - 1];
    };
    rec(rec);
    return {found.begin(), found.end()};
}

}  // namespace weakpi
