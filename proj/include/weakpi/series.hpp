#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "weakpi/error.hpp"
#include "weakpi/poly.hpp"
#include "weakpi/rational.hpp"
#include "weakpi/tableaux.hpp"

namespace weakpi {

/// Polynomial in t_1..t_k truncated above total degree `max_degree`.
/// Variable t_i has index i - 1.
class SymPoly {
public:
    SymPoly(int k, int max_degree) : k_(k), max_degree_(max_degree) {
        if (k < 0) throw argument_error("variable count must be nonnegative");
        if (max_degree < 0) throw argument_error("truncation degree must be nonnegative");
    }
    SymPoly(int k, int max_degree, const Poly& p) : SymPoly(k, max_degree) {
        poly_ = p.truncated(max_degree);
    }

    int variables() const noexcept { return k_; }
    int max_degree() const noexcept { return max_degree_; }
    const Poly& poly() const noexcept { return poly_; }

    rational coefficient(const std::vector<int>& exponents) const {
        Monomial m;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            m = m * Monomial::variable(static_cast<int>(i), exponents[i]);
        return poly_.coefficient(m);
    }

    SymPoly& operator+=(const SymPoly& o) {
        check(o);
        poly_ += o.poly_;
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        check(o);
        poly_ -= o.poly_;
        return *this;
    }
    friend SymPoly operator+(SymPoly x, const SymPoly& y) { return x += y; }
    friend SymPoly operator-(SymPoly x, const SymPoly& y) { return x -= y; }
    friend SymPoly operator*(const rational& c, SymPoly x) {
        x.poly_ *= c;
        return x;
    }
    friend SymPoly operator*(const SymPoly& x, const SymPoly& y) {
        x.check(y);
        SymPoly r(x.k_, x.max_degree_);
        r.poly_ = Poly::multiply(x.poly_, y.poly_, x.max_degree_);
        return r;
    }

    /// t_j -> t_j^2 for every variable.
    SymPoly squared_variables() const {
        Poly out;
        for (const auto& [m, c] : poly_.terms()) {
            Monomial sq;
            for (const auto& [v, e] : m.factors()) sq = sq * Monomial::variable(v, 2 * e);
            out.add_term(sq, c);
        }
        return SymPoly(k_, max_degree_, out);
    }

    std::string to_string() const {
        return format_polynomial(poly_, [](int v) { return "t" + std::to_string(v + 1); });
    }

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

private:
    void check(const SymPoly& o) const {
        if (o.k_ != k_ || o.max_degree_ != max_degree_)
            throw argument_error("series over different variable counts or truncations");
    }

    int k_;
    int max_degree_;
    Poly poly_;
};

/// e_i(t_1..t_k): sum over i-subsets of products of distinct variables.
inline SymPoly elementary_symmetric(int i, int k, int max_degree) {
    if (i < 0 || i > k) throw argument_error("elementary_symmetric: index out of range 0..k");
    Poly p;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == i) {
            Monomial m;
            for (int v : pick) m = m * Monomial::variable(v);
            p.add_term(m, rational(1));
            return;
        }
        for (int v = from; v < k; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return SymPoly(k, max_degree, p);
}

/// (1/2) sum_{i=0..k} [e_i^2 + (-1)^i e_i(t_1^2, ..., t_k^2)].
inline SymPoly carini_drensky(int k, int max_degree) {
    if (k < 1) throw argument_error("carini_drensky requires k >= 1");
    SymPoly sum(k, max_degree);
    for (int i = 0; i <= k; ++i) {
        // Compute without truncating e_i itself, so the square is exact up to max_degree.
        const SymPoly e = elementary_symmetric(i, k, std::max(max_degree, 2 * k));
        const SymPoly e_t(k, max_degree, e.poly());
        const SymPoly sq = e_t * e_t;
        const SymPoly sub(k, max_degree, e.squared_variables().poly());
        sum += sq;
        if (i % 2 == 0)
            sum += sub;
        else
            sum -= sub;
    }
    return rational(1, 2) * sum;
}

/// Combinatorial Schur function: sum of t^content over english-semistandard
/// tableaux of shape lambda with entries <= k.
inline SymPoly schur(const Shape& lambda, int k, int max_degree) {
    Poly p;
    if (lambda.size() <= max_degree) {
        for_each_ssyt(lambda, k, Convention::english, [&](const Tableau& t) {
            Monomial m;
            for (const auto& row : t.rows())
                for (int v : row) m = m * Monomial::variable(v - 1);
            p.add_term(m, rational(1));
        });
    }
    return SymPoly(k, max_degree, p);
}

/// Sum of s_lambda over lambda = (2^{2p}, 1^{2q}), 4p + 2q <= max_degree.
inline SymPoly hilbert_by_tableaux(int k, int max_degree) {
    if (k < 1) throw argument_error("hilbert_by_tableaux requires k >= 1");
    SymPoly sum(k, max_degree);
    for (int p = 0; 4 * p <= max_degree; ++p)
        for (int q = 0; 4 * p + 2 * q <= max_degree; ++q) {
            if (2 * p + 2 * q > k) continue;  // more rows than variables
            sum += schur(Shape::two_one(p, q), k, max_degree);
        }
    return sum;
}

inline integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Dimension of the multihomogeneous component of the given content:
/// 0 for odd total degree, for a multiplicity above 2, or for l = 0 with q
/// odd; 1 for l = 0 with q even; otherwise C(2s - 1, s) with l = 2s, where
/// l and q count the entries equal to 1 and 2.
inline integer dimension(const Content& content) {
    const auto& n = content.counts();
    if (content.total() % 2 != 0) return 0;
    if (std::any_of(n.begin(), n.end(), [](int x) { return x > 2; })) return 0;
    const long l = std::count(n.begin(), n.end(), 1);
    const long q = std::count(n.begin(), n.end(), 2);
    // C(-1, 0) = 1 would cover the l = 0 case; kept explicit.
    if (l == 0) return q % 2 == 0 ? 1 : 0;
    const long s = l / 2;
    return binomial(2 * s - 1, s);
}

/// Sum over contents c with entries in 0..2 and |c| <= max_degree of
/// dimension(c) * t^c.
inline SymPoly hilbert_by_dimensions(int k, int max_degree) {
    if (k < 1) throw argument_error("hilbert_by_dimensions requires k >= 1");
    Poly p;
    std::vector<int> c(k, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == k) {
            const integer d = dimension(Content(c));
            if (d == 0) return;
            Monomial m;
            for (int v = 0; v < k; ++v) m = m * Monomial::variable(v, c[v]);
            p.add_term(m, rational(d));
            return;
        }
        for (int e = 0; e <= 2 && used + e <= max_degree; ++e) {
            c[i] = e;
            rec(i + 1, used + e);
        }
        c[i] = 0;
    };
    rec(0, 0);
    return SymPoly(k, max_degree, p);
}

/// Coefficients of z^0 .. z^{2 max_m} of (1/2)(1 + (1 - 4z^2)^{-1/2}), the
/// real form of (1/2)(1 + i / sqrt((2z+1)(2z-1))). Expanded through the
/// generalized binomial series (1 + u)^{-1/2} with u = -4z^2.
inline std::vector<rational> gamma_coefficients(int max_m) {
    if (max_m < 0) throw argument_error("max_m must be nonnegative");
    std::vector<rational> out(2 * max_m + 1, rational(0));
    const rational alpha(-1, 2);
    rational binom(1);  // C(alpha, n)
    rational u_pow(1);  // (-4)^n
    for (int n = 0; n <= max_m; ++n) {
        if (n > 0) {
            binom = binom * (alpha - (n - 1)) / n;
            u_pow *= -4;
        }
        out[2 * n] = binom * u_pow / 2;
    }
    out[0] += rational(1, 2);
    return out;
}

}  // namespace weakpi
