#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weakpi/carray.hpp"
#include "weakpi/error.hpp"
#include "weakpi/rational.hpp"

namespace weakpi {

/// Element of the exterior algebra on generators e_1..e_g over Q. A basis
/// monomial e_{i1} ^ ... ^ e_{ik} (i1 < ... < ik) is stored as a bit mask
/// with bit (i - 1) set for each generator e_i.
class GrassmannElem {
public:
    using Mask = std::uint64_t;
    using Term = std::pair<Mask, rational>;
    static constexpr int max_generators = 63;

    explicit GrassmannElem(int generators = 0) : generators_(generators) {
        if (generators < 0 || generators > max_generators)
            throw argument_error("generator count must lie in 0.." + std::to_string(max_generators));
    }

    static GrassmannElem scalar(int generators, const rational& c) {
        GrassmannElem x(generators);
        x.add_term(0, c);
        return x;
    }

    /// e_i, 1-based.
    static GrassmannElem generator(int generators, int i) {
        GrassmannElem x(generators);
        if (i < 1 || i > generators) throw argument_error("generator index out of range");
        x.add_term(Mask{1} << (i - 1), rational(1));
        return x;
    }

    /// c * e_{i1} e_{i2} ... in the given order (sign applied for reordering).
    static GrassmannElem monomial(int generators, const std::vector<int>& indices,
                                  const rational& c = rational(1)) {
        GrassmannElem x = scalar(generators, c);
        for (int i : indices) x = x * generator(generators, i);
        return x;
    }

    int generators() const noexcept { return generators_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    rational coefficient(Mask m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Mask k) { return t.first < k; });
        return it != terms_.end() && it->first == m ? it->second : rational(0);
    }

    /// Every monomial has even degree (zero counts as even).
    bool is_even() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return std::popcount(t.first) % 2 == 0; });
    }
    bool is_odd() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return std::popcount(t.first) % 2 == 1; });
    }

    friend GrassmannElem operator+(const GrassmannElem& x, const GrassmannElem& y) {
        return combine(x, y, 1);
    }
    friend GrassmannElem operator-(const GrassmannElem& x, const GrassmannElem& y) {
        return combine(x, y, -1);
    }
    friend GrassmannElem operator*(const rational& k, const GrassmannElem& x) {
        GrassmannElem r(x.generators_);
        if (k == 0) return r;
        r.terms_ = x.terms_;
        for (auto& t : r.terms_) t.second *= k;
        return r;
    }

    /// Exterior product: e_i e_j = -e_j e_i, e_i e_i = 0.
    friend GrassmannElem operator*(const GrassmannElem& x, const GrassmannElem& y) {
        require_same(x, y);
        std::unordered_map<Mask, rational> acc;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                if (mx & my) continue;
                const rational c = cx * cy;
                if (reorder_sign(mx, my) < 0)
                    acc[mx | my] -= c;
                else
                    acc[mx | my] += c;
            }
        GrassmannElem r(x.generators_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.emplace_back(m, std::move(c));
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        return r;
    }

    friend bool operator==(const GrassmannElem&, const GrassmannElem&) = default;

    /// Sign of e_x e_y relative to the sorted monomial e_{x|y} (x & y == 0).
    static int reorder_sign(Mask x, Mask y) noexcept {
        int swaps = 0;
        while (y) {
            const int j = std::countr_zero(y);
            swaps += std::popcount(x >> (j + 1));
            y &= y - 1;
        }
        return swaps % 2 == 0 ? 1 : -1;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            rational mag = abs(c);
            std::string word;
            for (Mask k = m; k; k &= k - 1) word += "e" + std::to_string(std::countr_zero(k) + 1);
            if (word.empty())
                out << mag;
            else if (mag == 1)
                out << word;
            else
                out << mag << "*" << word;
        }
        return out.str();
    }

private:
    static void require_same(const GrassmannElem& x, const GrassmannElem& y) {
        if (x.generators_ != y.generators_)
            throw argument_error("Grassmann elements over different generator counts");
    }

    void add_term(Mask m, const rational& c) {
        if (c == 0) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Mask k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.insert(it, {m, c});
        }
    }

    static GrassmannElem combine(const GrassmannElem& x, const GrassmannElem& y, int sign) {
        require_same(x, y);
        GrassmannElem r(x.generators_);
        auto i = x.terms_.begin(), j = y.terms_.begin();
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == x.terms_.end() || j->first < i->first) {
                r.terms_.emplace_back(j->first, sign > 0 ? j->second : rational(-j->second));
                ++j;
            } else {
                rational c = sign > 0 ? rational(i->second + j->second) : rational(i->second - j->second);
                if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    int generators_;
    std::vector<Term> terms_;
};

inline GrassmannElem wedge(const GrassmannElem& x, const GrassmannElem& y) { return x * y; }

/// 2x2 super-matrix [[a, b], [c, d]] with a, d even and b, c odd.
class M11 {
public:
    M11(GrassmannElem a, GrassmannElem b, GrassmannElem c, GrassmannElem d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        const int g = a_.generators();
        if (b_.generators() != g || c_.generators() != g || d_.generators() != g)
            throw argument_error("matrix entries over different generator counts");
        if (!a_.is_even() || !d_.is_even()) throw parity_error("diagonal entries must be even");
        if (!b_.is_odd() || !c_.is_odd()) throw parity_error("off-diagonal entries must be odd");
    }

    static M11 scalar(int generators, const GrassmannElem& s) {
        GrassmannElem z(generators);
        return M11(s, z, z, s);
    }
    static M11 identity(int generators) {
        return scalar(generators, GrassmannElem::scalar(generators, rational(1)));
    }
    static M11 zero(int generators) {
        GrassmannElem z(generators);
        return M11(z, z, z, z);
    }
    static M11 antidiag(const GrassmannElem& b, const GrassmannElem& c) {
        GrassmannElem z(b.generators());
        return M11(z, b, c, z);
    }

    const GrassmannElem& a() const noexcept { return a_; }
    const GrassmannElem& b() const noexcept { return b_; }
    const GrassmannElem& c() const noexcept { return c_; }
    const GrassmannElem& d() const noexcept { return d_; }
    int generators() const noexcept { return a_.generators(); }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_scalar() const noexcept { return b_.is_zero() && c_.is_zero() && a_ == d_; }

    friend M11 operator+(const M11& x, const M11& y) {
        return M11(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
    }
    friend M11 operator-(const M11& x, const M11& y) {
        return M11(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
    }
    friend M11 operator*(const rational& k, const M11& x) {
        return M11(k * x.a_, k * x.b_, k * x.c_, k * x.d_);
    }
    friend M11 operator*(const M11& x, const M11& y) {
        return M11(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                   x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
    }

    friend bool operator==(const M11&, const M11&) = default;

    std::string to_string() const {
        return "[[" + a_.to_string() + ", " + b_.to_string() + "], [" + c_.to_string() + ", " +
               d_.to_string() + "]]";
    }

private:
    GrassmannElem a_, b_, c_, d_;
};

inline M11 m11_mul(const M11& x, const M11& y) { return x * y; }

/// str(A) = a - d.
inline GrassmannElem supertrace(const M11& x) { return x.a() - x.d(); }

inline M11 commutator(const M11& x, const M11& y) { return x * y - y * x; }

using Assignment = std::map<int, M11>;

/// f_S = [x_a1, x_b1] ... [x_am, x_bm] evaluated at supertrace-zero matrices.
inline M11 eval_array(const TwoRowArray& s, const Assignment& assign, int generators) {
    for (const auto& c : s.columns())
        for (int v : {c.top, c.bottom}) {
            auto it = assign.find(v);
            if (it == assign.end())
                throw argument_error("variable x" + std::to_string(v) + " is not assigned");
            if (!supertrace(it->second).is_zero())
                throw argument_error("variable x" + std::to_string(v) + " is assigned a matrix of nonzero supertrace");
        }
    M11 r = M11::identity(generators);
    for (const auto& c : s.columns()) r = r * commutator(assign.at(c.top), assign.at(c.bottom));
    return r;
}

/// Deterministic sampler of supertrace-zero matrices [[a, b], [c, a]]. Odd
/// entries mix degree-1 and degree-3 monomials, the even diagonal mixes
/// degrees 0 and 2; coefficients are drawn from {-3, ..., 3}.
class WSampler {
public:
    WSampler(int generators, std::uint64_t seed) : generators_(generators), rng_(seed) {}

    M11 next() {
        GrassmannElem a = draw({0, 2, 2});
        return M11(a, draw({1, 1, 3}), draw({1, 1, 3}), a);
    }

    /// Even central element a * I.
    M11 next_central() {
        GrassmannElem a = draw({0, 2, 2});
        return M11::scalar(generators_, a);
    }

private:
    GrassmannElem draw(std::initializer_list<int> degrees) {
        GrassmannElem x(generators_);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int deg : degrees) {
            if (deg > generators_) continue;
            std::vector<int> gens(generators_);
            for (int i = 0; i < generators_; ++i) gens[i] = i + 1;
            std::shuffle(gens.begin(), gens.end(), rng_);
            gens.resize(deg);
            x = x + GrassmannElem::monomial(generators_, gens, rational(coeff(rng_)));
        }
        return x;
    }

    int generators_;
    std::mt19937_64 rng_;
};

/// A polynomial to be tested for weak-identity status: `evaluate` receives
/// one matrix per variable x_1..x_arity.
struct Candidate {
    std::string name;
    int arity;
    int degree;
    std::function<M11(std::span<const M11>)> evaluate;
};

/// c3 = [x1, x2, x3] = [[x1, x2], x3].
inline Candidate identity_c3() {
    return {"c3", 3, 3, [](std::span<const M11> w) { return commutator(commutator(w[0], w[1]), w[2]); }};
}

/// p = [x2, x1][x3, x1][x4, x1].
inline Candidate identity_p() {
    return {"p", 4, 6, [](std::span<const M11> w) {
                return commutator(w[1], w[0]) * commutator(w[2], w[0]) * commutator(w[3], w[0]);
            }};
}

/// [x1, x2], which is not a weak identity.
inline Candidate commutator_x1_x2() {
    return {"commutator", 2, 2, [](std::span<const M11> w) { return commutator(w[0], w[1]); }};
}

/// f_S - sum(alpha_i f_{S_i}) for a combination given as (array, coeff) pairs.
inline Candidate array_difference(const TwoRowArray& s,
                                  std::vector<std::pair<TwoRowArray, rational>> combination) {
    int arity = 0;
    auto widen = [&](const TwoRowArray& x) {
        for (const auto& c : x.columns()) arity = std::max({arity, c.top, c.bottom});
    };
    widen(s);
    for (const auto& [x, c] : combination) widen(x);
    return {"difference", arity, 2 * static_cast<int>(s.size()),
            [s, combination](std::span<const M11> w) {
                const int g = w.front().generators();
                Assignment assign;
                for (std::size_t i = 0; i < w.size(); ++i) assign.emplace(static_cast<int>(i + 1), w[i]);
                M11 r = eval_array(s, assign, g);
                for (const auto& [x, c] : combination) r = r - c * eval_array(x, assign, g);
                return r;
            }};
}

struct VerifyResult {
    bool holds = true;
    int samples_run = 0;
    std::vector<M11> counterexample;  // substitution for x_1..x_arity
    std::optional<M11> value;         // nonzero value at the counterexample
};

/// Evaluates the candidate at `samples` seeded random substitutions from W
/// and stops at the first nonzero value. Vanishing is evidence, not proof.
inline VerifyResult verify_weak_identity(const Candidate& f, int samples, int generators,
                                         std::uint64_t seed) {
    if (generators < 2 * f.degree)
        throw argument_error("need at least " + std::to_string(2 * f.degree) + " generators for " + f.name);
    WSampler sampler(generators, seed);
    VerifyResult res;
    for (int k = 0; k < samples; ++k) {
        std::vector<M11> w;
        for (int i = 0; i < f.arity; ++i) w.push_back(sampler.next());
        M11 value = f.evaluate(w);
        ++res.samples_run;
        if (!value.is_zero()) {
            res.holds = false;
            res.counterexample = std::move(w);
            res.value = std::move(value);
            break;
        }
    }
    return res;
}

/// f for the array [[r+1, r+1, ..., 2r, 2r], [r, r, ..., 1, 1]].
inline TwoRowArray doubled_staircase(int r) {
    std::vector<Column> cols;
    for (int j = 1; j <= r; ++j) {
        cols.push_back({r + j, r + 1 - j});
        cols.push_back({r + j, r + 1 - j});
    }
    return TwoRowArray(std::move(cols));
}

/// Evaluates doubled_staircase(r) at w_i = antidiag(u_i, v_i) with
/// u_i = e_i and v_i = e_{2r+i} on 4r generators.
inline M11 scalar_check_value(int r) {
    if (r < 0) throw argument_error("r must be nonnegative");
    const int g = 4 * r;
    Assignment assign;
    for (int i = 1; i <= 2 * r; ++i)
        assign.emplace(i, M11::antidiag(GrassmannElem::generator(g, i),
                                        GrassmannElem::generator(g, 2 * r + i)));
    return eval_array(doubled_staircase(r), assign, g);
}

/// The expected value 2^r u_1...u_{2r} v_1...v_{2r} * I.
inline M11 scalar_check_expected(int r) {
    const int g = 4 * r;
    std::vector<int> order;
    for (int i = 1; i <= 4 * r; ++i) order.push_back(i);
    rational two_r(1);
    for (int i = 0; i < r; ++i) two_r *= 2;
    return M11::scalar(g, GrassmannElem::monomial(g, order, two_r));
}

inline bool scalar_check(int r) { return scalar_check_value(r) == scalar_check_expected(r); }

}  // namespace weakpi
