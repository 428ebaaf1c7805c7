#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "weakpi/carray.hpp"
#include "weakpi/error.hpp"
#include "weakpi/rational.hpp"

namespace weakpi {

/// Rational linear combination of c-arrays, keyed in ordering (a_m..a_1,
/// b_1..b_m). Zero coefficients are never stored. As the output of
/// `straighten` every key is a normal c-array of one common content.
class LinComb {
public:
    using Terms = std::map<TwoRowArray, rational, ArrayOrder>;

    LinComb() = default;
    LinComb(std::initializer_list<std::pair<TwoRowArray, rational>> terms) {
        for (const auto& [s, c] : terms) add(s, c);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    rational coefficient(const TwoRowArray& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? rational(0) : it->second;
    }

    void add(const TwoRowArray& s, const rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void erase(const TwoRowArray& s) { terms_.erase(s); }

    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    Terms terms_;
};

namespace detail {

inline bool has_large_multiplicity(const TwoRowArray& s) { return !has_multiplicities_at_most_two(s); }

/// Lexicographically smallest r < s < t with b_r <= b_s <= b_t.
inline std::optional<std::array<std::size_t, 3>> first_increasing_triple(const TwoRowArray& s) {
    const std::size_t m = s.size();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t u = r + 1; u < m; ++u) {
            if (s[r].bottom > s[u].bottom) continue;
            for (std::size_t t = u + 1; t < m; ++t)
                if (s[u].bottom <= s[t].bottom) return std::array<std::size_t, 3>{r, u, t};
        }
    return std::nullopt;
}

}  // namespace detail

/// The linearized p-relation for a three-column c-array U with weakly
/// increasing bottom row, after sign-tracked normalization of every term and
/// collection of like terms. With distinct bottoms this is the sum over all
/// six bottom-row permutations; with bottoms {b, b, beta} it is the sum of
/// the three distinct arrangements. The relation reads sum(coeff * f) = 0.
inline LinComb triple_relation(const TwoRowArray& u) {
    if (u.size() != 3 || !is_c_array(u) || u[0].bottom > u[1].bottom || u[1].bottom > u[2].bottom)
        throw contract_error("triple_relation requires a 3-column c-array with increasing bottoms");
    std::array<int, 3> b = {u[0].bottom, u[1].bottom, u[2].bottom};
    if (b[0] == b[2]) throw contract_error("triple_relation: a symbol occurs three times in the bottom row");

    // next_permutation over the sorted bottoms yields each distinct arrangement once.
    LinComb rel;
    do {
        TwoRowArray raw({u[0].top, u[1].top, u[2].top}, {b[0], b[1], b[2]});
        auto n = normalize(raw);
        if (!n.is_zero()) rel.add(n.array(), rational(n.sign()));
    } while (std::next_permutation(b.begin(), b.end()));
    return rel;
}

/// Rewrites f_S modulo the ideal generated by c3 and p as a combination of
/// normal c-arrays. Terms violating s4 are rewritten least-first through
/// `triple_relation` on their smallest increasing triple; every produced
/// array is strictly greater than the one it replaces.
inline LinComb straighten(const TwoRowArray& s) {
    const auto n = normalize(s);
    if (n.is_zero() || detail::has_large_multiplicity(n.array())) return {};

    LinComb work;
    work.add(n.array(), rational(n.sign()));
    for (;;) {
        auto it = std::find_if(work.terms().begin(), work.terms().end(),
                               [](const auto& kv) { return !avoids_increasing_triple(kv.first); });
        if (it == work.terms().end()) break;
        const TwoRowArray target = it->first;
        const rational coeff = it->second;

        const auto idx = *detail::first_increasing_triple(target);
        std::vector<Column> picked, rest;
        for (std::size_t k = 0; k < target.size(); ++k) {
            if (k == idx[0] || k == idx[1] || k == idx[2])
                picked.push_back(target[k]);
            else
                rest.push_back(target[k]);
        }
        const TwoRowArray u(std::move(picked));
        const TwoRowArray v(std::move(rest));

        LinComb rel = triple_relation(u);
        const rational self = rel.coefficient(u);
        if (self == 0) throw contract_error("relation does not involve the rewritten array");
        rel.erase(u);

        // f_U = -(1/self) * sum(others); multiply through by f_V.
        work.erase(target);
        for (const auto& [other, c] : rel.terms()) {
            TwoRowArray produced = star(other, v);
            if (compare(produced, target) <= 0)
                throw contract_error("straightening step did not increase the array");
            work.add(produced, rational(-coeff * c / self));
        }
    }
    return work;
}

/// Bilinear extension of `star`, straightened term by term.
inline LinComb lincomb_multiply(const LinComb& x, const LinComb& y) {
    LinComb out;
    for (const auto& [sx, cx] : x.terms())
        for (const auto& [sy, cy] : y.terms()) {
            const rational c = cx * cy;
            const LinComb product = straighten(star(sx, sy));
            for (const auto& [s, k] : product.terms()) out.add(s, rational(c * k));
        }
    return out;
}

/// Full linearization of every doubled symbol. Symbols are relabeled in
/// increasing order onto 1..2m: a simple symbol takes the next label, a
/// doubled one the next two labels (L, L+1). The two occurrences of a doubled
/// symbol (in reading order a_1 b_1 a_2 b_2 ...) receive L, L+1 in both
/// ways, giving 2^d arrays for d doubled symbols, each with coefficient 1.
inline std::vector<TwoRowArray> multilinearize(const TwoRowArray& s) {
    const auto content = content_of(s);
    const auto& counts = content.counts();
    if (std::any_of(counts.begin(), counts.end(), [](int n) { return n > 2; }))
        throw contract_error("multilinearize requires every multiplicity <= 2");

    std::vector<int> first_label(counts.size() + 1, 0);
    std::vector<int> doubled;  // symbols occurring twice
    int next = 1;
    for (std::size_t v = 1; v <= counts.size(); ++v) {
        if (counts[v - 1] == 0) continue;
        first_label[v] = next;
        next += counts[v - 1];
        if (counts[v - 1] == 2) doubled.push_back(static_cast<int>(v));
    }

    std::vector<TwoRowArray> out;
    const std::size_t variants = std::size_t{1} << doubled.size();
    for (std::size_t mask = 0; mask < variants; ++mask) {
        std::vector<int> seen(counts.size() + 1, 0);
        auto relabel = [&](int v) {
            int offset = seen[v]++;
            auto pos = std::find(doubled.begin(), doubled.end(), v);
            if (pos != doubled.end() && (mask >> (pos - doubled.begin())) & 1) offset = 1 - offset;
            return first_label[v] + offset;
        };
        std::vector<Column> cols;
        for (const auto& c : s.columns()) {
            int a = relabel(c.top);
            int b = relabel(c.bottom);
            cols.push_back({a, b});
        }
        out.emplace_back(std::move(cols));
    }
    return out;
}

}  // namespace weakpi
