#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weakpi/rational.hpp"

namespace weakpi {

/// Sparse monomial: (variable index, exponent) pairs, sorted by index, with
/// positive exponents. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<int, int>;

    Monomial() = default;
    static Monomial variable(int v, int exponent = 1) {
        Monomial m;
        if (exponent > 0) m.factors_.push_back({v, exponent});
        return m;
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }

    int degree() const noexcept {
        int d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    int exponent(int v) const noexcept {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
        return it != factors_.end() && it->first == v ? it->second : 0;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        Monomial m;
        auto i = x.factors_.begin(), j = y.factors_.begin();
        while (i != x.factors_.end() || j != y.factors_.end()) {
            if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first))
                m.factors_.push_back(*i++);
            else if (i == x.factors_.end() || j->first < i->first)
                m.factors_.push_back(*j++);
            else {
                m.factors_.push_back({i->first, i->second + j->second});
                ++i;
                ++j;
            }
        }
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Exact multivariate polynomial over commuting variables. Terms are kept in
/// a map, so the representation is canonical: sorted monomials, no zeros.
template <class Coeff>
class Polynomial {
public:
    using Terms = std::map<Monomial, Coeff>;

    Polynomial() = default;
    explicit Polynomial(const Coeff& c) { add_term(Monomial{}, c); }
    static Polynomial variable(int v) {
        Polynomial p;
        p.add_term(Monomial::variable(v), Coeff(1));
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Coeff coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(const Monomial& m, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, Coeff(-c));
        return *this;
    }
    Polynomial& operator*=(const Coeff& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= k;
        return *this;
    }

    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(Polynomial x, const Coeff& k) { return x *= k; }
    friend Polynomial operator*(const Coeff& k, Polynomial x) { return x *= k; }

    friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
        return multiply(x, y, -1);
    }

    /// Product keeping only monomials of total degree <= max_degree (all
    /// monomials when max_degree < 0).
    static Polynomial multiply(const Polynomial& x, const Polynomial& y, int max_degree) {
        Polynomial r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                if (max_degree >= 0 && mx.degree() + my.degree() > max_degree) continue;
                r.add_term(mx * my, Coeff(cx * cy));
            }
        return r;
    }

    Polynomial truncated(int max_degree) const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.degree() <= max_degree) r.terms_.emplace(m, c);
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

using Poly = Polynomial<rational>;

/// Graded order used for printing: lower total degree first, then larger
/// exponent of the lowest-indexed variable first (t1^2 before t1*t2).
inline bool graded_before(const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    for (std::size_t i = 0; i < std::min(fx.size(), fy.size()); ++i) {
        if (fx[i].first != fy[i].first) return fx[i].first < fy[i].first;
        if (fx[i].second != fy[i].second) return fx[i].second > fy[i].second;
    }
    return fx.size() < fy.size();
}

/// Renders "c*x^e*y + ..." in graded order; "0" for the zero polynomial.
template <class Coeff>
std::string format_polynomial(const Polynomial<Coeff>& p,
                              const std::function<std::string(int)>& name) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Coeff>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return graded_before(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        std::string factors;
        for (const auto& [v, e] : m.factors()) {
            if (!factors.empty()) factors += "*";
            factors += name(v);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty())
            out << mag;
        else if (mag == 1)
            out << factors;
        else
            out << mag << "*" << factors;
    }
    return out.str();
}

}  // namespace weakpi
