#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "weakpi/error.hpp"

namespace weakpi {

/// A partition (lambda_1 >= lambda_2 >= ... >= lambda_r >= 1). The empty
/// partition is legal.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw shape_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw shape_error("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t rows() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// True for (l1, l1, l2, l2, ...): every part occurs in consecutive pairs.
    bool is_double() const noexcept {
        if (parts_.size() % 2 != 0) return false;
        for (std::size_t i = 0; i < parts_.size(); i += 2)
            if (parts_[i] != parts_[i + 1]) return false;
        return true;
    }

    /// The double-hook family (2^{2p}, 1^{2q}).
    static Shape two_one(int p, int q) {
        std::vector<int> parts(2 * p, 2);
        parts.insert(parts.end(), 2 * q, 1);
        return Shape(std::move(parts));
    }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

/// Multiplicities (n_1, ..., n_k) of the symbols 1..k; indices past k count 0.
class Content {
public:
    Content() = default;
    explicit Content(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int n : counts_)
            if (n < 0) throw argument_error("content entries must be nonnegative");
    }

    const std::vector<int>& counts() const noexcept { return counts_; }
    std::size_t length() const noexcept { return counts_.size(); }
    int total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

    int operator[](std::size_t i) const noexcept { return i < counts_.size() ? counts_[i] : 0; }

    /// Drops trailing zeros so that equal multisets compare equal.
    Content trimmed() const {
        auto c = counts_;
        while (!c.empty() && c.back() == 0) c.pop_back();
        return Content(std::move(c));
    }

    bool is_multilinear() const noexcept {
        return std::all_of(counts_.begin(), counts_.end(), [](int n) { return n == 1; });
    }

    friend bool operator==(const Content& a, const Content& b) {
        return a.trimmed().counts_ == b.trimmed().counts_;
    }

private:
    std::vector<int> counts_;
};

enum class Convention { english, french };

/// Rows of positive integers; row i has lambda_i entries. Rows are numbered
/// from 1 wherever an operation takes or returns a row index.
class Tableau {
public:
    using Row = std::vector<int>;

    Tableau() = default;
    explicit Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {}

    const std::vector<Row>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    /// Throws shape_error unless the row lengths form a partition.
    Shape shape() const {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
        return Shape(std::move(parts));
    }

    /// Row-reading word: rows top to bottom, each left to right.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    std::vector<Row> rows_;
};

namespace detail {

inline void require_positive_entries(const Tableau& t) {
    for (const auto& r : t.rows())
        for (int v : r)
            if (v < 1) throw argument_error("tableau entries must be positive integers");
}

inline bool row_ok(int left, int right, Convention c) {
    return c == Convention::english ? left <= right : left < right;
}

inline bool column_ok(int above, int below, Convention c) {
    return c == Convention::english ? above < below : above <= below;
}

inline bool is_semistandard(const Tableau& t, Convention c) {
    (void)t.shape();
    require_positive_entries(t);
    const auto& rows = t.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j + 1 < rows[i].size() && !row_ok(rows[i][j], rows[i][j + 1], c)) return false;
            if (i + 1 < rows.size() && j < rows[i + 1].size() &&
                !column_ok(rows[i][j], rows[i + 1][j], c))
                return false;
        }
    }
    return true;
}

}  // namespace detail

/// Rows weakly increasing, columns strictly increasing.
inline bool is_semistandard_english(const Tableau& t) {
    return detail::is_semistandard(t, Convention::english);
}

/// Rows strictly increasing, columns weakly increasing.
inline bool is_semistandard_french(const Tableau& t) {
    return detail::is_semistandard(t, Convention::french);
}

inline bool is_semistandard(const Tableau& t, Convention c) { return detail::is_semistandard(t, c); }

/// English-semistandard tableau of double shape (l1^2, ..., lr^2). Never
/// throws; a malformed shape is simply not a d-tableau.
inline bool is_d_tableau(const Tableau& t) {
    try {
        return t.shape().is_double() && is_semistandard_english(t);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

inline Content content_of(const Tableau& t) {
    std::vector<int> counts;
    for (const auto& r : t.rows())
        for (int v : r) {
            if (v < 1) throw argument_error("tableau entries must be positive integers");
            if (static_cast<std::size_t>(v) > counts.size()) counts.resize(v, 0);
            ++counts[v - 1];
        }
    return Content(std::move(counts));
}

namespace detail {

// Fills cells in row-reading order with increasing candidate values, so
// results come out in lexicographic order of the reading word. `budget`
// limits multiplicities when non-null; otherwise entries range over 1..k.
class SsytFiller {
public:
    SsytFiller(const Shape& shape, int max_entry, Convention conv, std::vector<int>* budget,
               const std::function<void(const Tableau&)>& emit)
        : shape_(shape), max_entry_(max_entry), conv_(conv), budget_(budget), emit_(emit) {
        for (std::size_t i = 0; i < shape.rows(); ++i)
            for (int j = 0; j < shape.parts()[i]; ++j)
                cells_.push_back({static_cast<int>(i), j});
        rows_.resize(shape.rows());
        for (std::size_t i = 0; i < shape.rows(); ++i) rows_[i].assign(shape.parts()[i], 0);
    }

    void run() { fill(0); }

private:
    struct Cell {
        int row, col;
    };

    void fill(std::size_t n) {
        if (n == cells_.size()) {
            emit_(Tableau(rows_));
            return;
        }
        const auto [i, j] = cells_[n];
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows_[i][j - 1] + (conv_ == Convention::english ? 0 : 1));
        if (i > 0) lo = std::max(lo, rows_[i - 1][j] + (conv_ == Convention::english ? 1 : 0));
        for (int v = lo; v <= max_entry_; ++v) {
            if (budget_ && (*budget_)[v - 1] == 0) continue;
            if (budget_) --(*budget_)[v - 1];
            rows_[i][j] = v;
            fill(n + 1);
            if (budget_) ++(*budget_)[v - 1];
        }
        rows_[i][j] = 0;
    }

    const Shape& shape_;
    int max_entry_;
    Convention conv_;
    std::vector<int>* budget_;
    const std::function<void(const Tableau&)>& emit_;
    std::vector<Cell> cells_;
    std::vector<Tableau::Row> rows_;
};

}  // namespace detail

/// Visits every semistandard tableau of `shape` with entries in 1..max_entry.
inline void for_each_ssyt(const Shape& shape, int max_entry, Convention conv,
                          const std::function<void(const Tableau&)>& visit) {
    detail::SsytFiller(shape, max_entry, conv, nullptr, visit).run();
}

/// All semistandard tableaux of the given shape and content, each once, in
/// lexicographic order of the row-reading word.
inline std::vector<Tableau> enumerate_ssyt(const Shape& shape, const Content& content,
                                           Convention conv) {
    if (shape.size() != content.total())
        throw argument_error("content total " + std::to_string(content.total()) +
                             " does not match shape size " + std::to_string(shape.size()));
    std::vector<Tableau> out;
    std::vector<int> budget = content.counts();
    const std::function<void(const Tableau&)> emit = [&](const Tableau& t) { out.push_back(t); };
    detail::SsytFiller(shape, static_cast<int>(content.length()), conv, &budget, emit).run();
    return out;
}

/// All partitions of n, parts in decreasing order, lexicographically decreasing.
inline std::vector<Shape> partitions_of(int n) {
    std::vector<Shape> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace weakpi
