#pragma once

// Exit criteria, shared by the acceptance test binary and `weakpi selftest`.
// Every check is exact; tolerances are zero unless a time budget is stated.

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "weakpi/bijection.hpp"
#include "weakpi/carray.hpp"
#include "weakpi/grassmann.hpp"
#include "weakpi/io.hpp"
#include "weakpi/krs.hpp"
#include "weakpi/oracle.hpp"
#include "weakpi/selftest/oracles.hpp"
#include "weakpi/series.hpp"
#include "weakpi/straighten.hpp"

namespace weakpi::selftest {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds = 0;
};

namespace detail {

class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream out;
        out << checks_ << " checks, " << failed_ << " failed";
        for (const auto& f : failures_) out << "; " << f;
        return out.str();
    }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

inline CriterionResult timed(int id, std::string title, const std::function<std::pair<bool, std::string>()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    auto [ok, detail] = body();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {id, std::move(title), ok, std::move(detail), s};
}

inline std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.rbegin(), v.rend());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/// Primitive integer form of a relation: divide by the gcd of the
/// coefficients, which are integers here.
inline LinComb primitive(const LinComb& rel) {
    integer g = 0;
    for (const auto& [s, c] : rel.terms()) g = gcd(g, integer(c.get_num()));
    LinComb out;
    for (const auto& [s, c] : rel.terms()) out.add(s, rational(c / rational(g)));
    return out;
}

inline TwoRowArray arr(std::vector<int> top, std::vector<int> bottom) {
    return TwoRowArray(top, bottom);
}

}  // namespace detail

inline CriterionResult criterion_bijection() {
    return detail::timed(1, "bijection round trip (c-arrays m<=3, d-tableaux <=8 cells, entries<=6)", [] {
        detail::Tally t;
        for (const auto& s : all_c_arrays(3, 6)) {
            const auto tab = carray_to_dtableau(s);
            t.check(is_d_tableau(tab), "not a d-tableau: " + io::one_line(s));
            t.check(content_of(tab) == content_of(s), "content changed: " + io::one_line(s));
            t.check(dtableau_to_carray(tab) == s, "array round trip: " + io::one_line(s));
        }
        for (const auto& shape : double_shapes(8))
            for_each_ssyt(shape, 6, Convention::english, [&](const Tableau& tab) {
                const auto s = dtableau_to_carray(tab);
                t.check(classify(s) != ArrayClass::raw, "not a c-array: " + io::one_line(tab));
                t.check(carray_to_dtableau(s) == tab, "tableau round trip: " + io::one_line(tab));
            });
        return std::pair{t.ok(), t.summary()};
    });
}

inline CriterionResult criterion_first_row() {
    return detail::timed(2, "first row length = longest weakly increasing bottom subsequence (m<=4, entries<=8)", [] {
        detail::Tally t;
        for (const auto& s : all_c_arrays(4, 8))
            t.check(first_row_length(s) == brute_longest_weakly_increasing(s.bottom()), io::one_line(s));
        return std::pair{t.ok(), t.summary()};
    });
}

inline CriterionResult criterion_row_bumping() {
    return detail::timed(3, "row bumping lemma as stated: x<=y => i>=j, h<k; x>y => i>j, h>=k (<=5 cells, entries<=6)", [] {
        detail::Tally t;
        std::size_t weak_fail = 0, strict_fail = 0, strict_below = 0, strict_cases = 0;
        for (const auto& tab : all_ssyt(5, 6, Convention::english))
            for (int x = 1; x <= 6; ++x) {
                const auto [t1, i] = row_insert(tab, x);
                const int h = static_cast<int>(t1.rows()[i - 1].size());
                for (int y = 1; y <= 6; ++y) {
                    const auto [t2, j] = row_insert(t1, y);
                    const int k = static_cast<int>(t2.rows()[j - 1].size());
                    const bool ok = x <= y ? (i >= j && h < k) : (i > j && h >= k);
                    if (!ok) ++(x <= y ? weak_fail : strict_fail);
                    if (x > y) {
                        ++strict_cases;
                        if (j > i && k <= h) ++strict_below;
                    }
                    t.check(ok, "T={" + io::one_line(tab) + "} x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                    " i=" + std::to_string(i) + " j=" + std::to_string(j) + " h=" + std::to_string(h) +
                                    " k=" + std::to_string(k));
                }
            }
        std::ostringstream note;
        note << "; failures x<=y: " << weak_fail << ", x>y: " << strict_fail << "; x>y with j>i, k<=h: "
             << strict_below << "/" << strict_cases;
        return std::pair{t.ok(), t.summary() + note.str()};
    });
}

inline CriterionResult criterion_counting() {
    return detail::timed(4, "|N(1^2s)| = C(2s-1,s) for s=1..5; |N(2^q)| = 1/0 for q even/odd", [] {
        detail::Tally t;
        const std::uint64_t expected[] = {1, 3, 10, 35, 126};
        const auto t0 = std::chrono::steady_clock::now();
        double small = 0;
        for (int s = 1; s <= 5; ++s) {
            const auto n = enumerate_normal(ones(2 * s)).size();
            t.check(n == expected[s - 1] && integer(n) == binomial(2 * s - 1, s),
                    "s=" + std::to_string(s) + " got " + std::to_string(n));
            if (s == 4) small = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        t.check(small < 10.0, "s<=4 took " + std::to_string(small) + " s");
        for (int q = 1; q <= 4; ++q) {
            const auto n = enumerate_normal(Content(std::vector<int>(q, 2))).size();
            t.check(n == (q % 2 == 0 ? 1u : 0u), "q=" + std::to_string(q) + " got " + std::to_string(n));
        }
        return std::pair{t.ok(), t.summary() + "; s<=4 in " + std::to_string(small) + " s"};
    });
}

inline CriterionResult criterion_reductions() {
    return detail::timed(5, "content permutation invariance and multilinear reductions (sum<=8, n_i<=2)", [] {
        detail::Tally t;
        for (const auto& c : contents_up_to_two(8, 8)) {
            const auto n = enumerate_normal(c).size();
            const auto canon = enumerate_normal(Content(detail::sorted_desc(c.counts()))).size();
            t.check(n == canon, "permutation invariance");
            const auto& v = c.counts();
            const int l = static_cast<int>(std::count(v.begin(), v.end(), 1));
            const int q = static_cast<int>(std::count(v.begin(), v.end(), 2));
            if (c.total() % 2 != 0) {
                t.check(n == 0, "odd total");
            } else if (l == 0) {
                t.check(n == (q % 2 == 0 ? 1u : 0u), "only doubled symbols");
            } else {
                const auto reduced = q % 2 == 0 ? enumerate_normal(ones(l)).size()
                                                : enumerate_normal(ones_then_two(l)).size();
                t.check(n == reduced, "reduction to multilinear / (1..1,2)");
            }
        }
        for (int l = 2; l <= 6; l += 2)
            t.check(enumerate_normal(ones_then_two(l)).size() == enumerate_normal(ones(l)).size(),
                    "(1^l,2) vs 1^l, l=" + std::to_string(l));
        return std::pair{t.ok(), t.summary()};
    });
}

inline CriterionResult criterion_straightening() {
    return detail::timed(6, "straightening soundness via phi (m<=3, entries<=6) and derived relation forms", [] {
        using detail::arr;
        detail::Tally t;
        auto linearized = [](const TwoRowArray& s, const rational& c, ArrayCombination& out) {
            for (const auto& x : multilinearize(s)) out.push_back({x, c});
        };
        for (int m = 0; m <= 3; ++m)
            for (const auto& s : all_raw_arrays(m, 6)) {
                if (!has_multiplicities_at_most_two(s)) continue;
                const auto l = straighten(s);
                bool normal = true;
                for (const auto& [x, c] : l.terms()) normal = normal && is_normal(x);
                t.check(normal, "non-normal output: " + io::one_line(s));
                ArrayCombination lhs, rhs;
                linearized(s, rational(1), lhs);
                for (const auto& [x, c] : l.terms()) linearized(x, c, rhs);
                t.check(phi(lhs) == phi(rhs), "phi mismatch: " + io::one_line(s));
            }

        struct Form {
            const char* name;
            TwoRowArray s;
            LinComb relation;  // verbatim, primitive integer form
            LinComb solved;    // straighten(s)
        };
        const std::vector<Form> forms = {
            {"(4) a1=a2", arr({5, 5, 6}, {1, 2, 3}),
             {{arr({5, 5, 6}, {1, 2, 3}), 1}, {arr({5, 5, 6}, {1, 3, 2}), 1}, {arr({5, 5, 6}, {2, 3, 1}), 1}},
             {{arr({5, 5, 6}, {1, 3, 2}), -1}, {arr({5, 5, 6}, {2, 3, 1}), -1}}},
            {"(4) a2=a3", arr({4, 5, 5}, {1, 2, 3}),
             {{arr({4, 5, 5}, {1, 2, 3}), 1}, {arr({4, 5, 5}, {2, 1, 3}), 1}, {arr({4, 5, 5}, {3, 1, 2}), 1}},
             {{arr({4, 5, 5}, {2, 1, 3}), -1}, {arr({4, 5, 5}, {3, 1, 2}), -1}}},
            {"(5)", arr({3, 3, 4}, {1, 1, 2}),
             {{arr({3, 3, 4}, {1, 1, 2}), 1}, {arr({3, 3, 4}, {1, 2, 1}), 2}},
             {{arr({3, 3, 4}, {1, 2, 1}), -2}}},
            {"(6)", arr({3, 3, 4}, {1, 2, 2}),
             {{arr({3, 3, 4}, {1, 2, 2}), 2}, {arr({3, 3, 4}, {2, 2, 1}), 1}},
             {{arr({3, 3, 4}, {2, 2, 1}), rational(-1, 2)}}},
            {"(7)", arr({3, 4, 4}, {1, 1, 2}),
             {{arr({3, 4, 4}, {1, 1, 2}), 2}, {arr({3, 4, 4}, {2, 1, 1}), 1}},
             {{arr({3, 4, 4}, {2, 1, 1}), rational(-1, 2)}}},
            {"(8)", arr({3, 4, 4}, {1, 2, 2}),
             {{arr({3, 4, 4}, {1, 2, 2}), 1}, {arr({3, 4, 4}, {2, 1, 2}), 2}},
             {{arr({3, 4, 4}, {2, 1, 2}), -2}}},
        };
        for (const auto& f : forms) {
            t.check(detail::primitive(triple_relation(f.s)) == f.relation, std::string("relation ") + f.name);
            t.check(straighten(f.s) == f.solved, std::string("solved form ") + f.name);
        }
        return std::pair{t.ok(), t.summary()};
    });
}

inline CriterionResult criterion_independence() {
    return detail::timed(7, "rank of phi over N(1^2m) = |N| for 2m = 2,4,6,8", [] {
        detail::Tally t;
        const std::size_t expected[] = {1, 3, 10, 35};
        std::string ranks;
        for (int m = 1; m <= 4; ++m) {
            const auto n = enumerate_normal(ones(2 * m));
            const auto r = independence_rank(n);
            ranks += (m > 1 ? "," : "") + std::to_string(r);
            t.check(r == n.size() && r == expected[m - 1], "2m=" + std::to_string(2 * m));
        }
        return std::pair{t.ok(), t.summary() + "; ranks " + ranks};
    });
}

inline CriterionResult criterion_hilbert() {
    return detail::timed(8, "Hilbert series: Carini-Drensky = Schur sum = dimension sum (k=1..3, deg<=8)", [] {
        detail::Tally t;
        for (int k = 1; k <= 3; ++k) {
            const auto cd = carini_drensky(k, 8);
            const auto tab = hilbert_by_tableaux(k, 8);
            const auto dims = hilbert_by_dimensions(k, 8);
            t.check(cd == tab, "cd vs tableaux, k=" + std::to_string(k));
            t.check(tab == dims, "tableaux vs dimensions, k=" + std::to_string(k));
        }
        Poly spot;
        spot.add_term(Monomial{}, rational(1));
        spot.add_term(Monomial::variable(0) * Monomial::variable(1), rational(1));
        spot.add_term(Monomial::variable(0, 2) * Monomial::variable(1, 2), rational(1));
        t.check(carini_drensky(2, 8) == SymPoly(2, 8, spot), "H(B_2) = 1 + t1 t2 + t1^2 t2^2");
        return std::pair{t.ok(), t.summary()};
    });
}

inline CriterionResult criterion_codimension() {
    return detail::timed(9, "codimension series matches |N(1^2m)| at z^2..z^8; odd coefficients vanish", [] {
        detail::Tally t;
        const auto g = gamma_coefficients(4);
        t.check(g[0] == 1, "z^0");
        for (int m = 1; m <= 4; ++m) {
            const auto n = enumerate_normal(ones(2 * m)).size();
            t.check(g[2 * m] == rational(static_cast<long>(n)), "z^" + std::to_string(2 * m));
            t.check(g[2 * m - 1] == 0, "z^" + std::to_string(2 * m - 1));
        }
        return std::pair{t.ok(), t.summary()};
    });
}

inline constexpr std::uint64_t grassmann_seed = 20011;

inline CriterionResult criterion_grassmann() {
    return detail::timed(10, "Grassmann model: c3 (g=12) and p (g=16) vanish, [x1,x2] fails, scalar check r=1,2", [] {
        detail::Tally t;
        const auto c3 = verify_weak_identity(identity_c3(), 100, 12, grassmann_seed);
        t.check(c3.holds && c3.samples_run == 100, "c3 did not vanish");
        const auto p = verify_weak_identity(identity_p(), 100, 16, grassmann_seed);
        t.check(p.holds && p.samples_run == 100, "p did not vanish");
        const auto comm = verify_weak_identity(commutator_x1_x2(), 100, 12, grassmann_seed);
        t.check(!comm.holds, "[x1,x2] vanished on every sample");
        for (int r = 1; r <= 2; ++r) {
            const auto got = scalar_check_value(r);
            const auto want = scalar_check_expected(r);
            t.check(scalar_check(r), "r=" + std::to_string(r) + ": got " + got.a().to_string() +
                                         " * I, expected " + want.a().to_string() + " * I");
        }
        return std::pair{t.ok(), t.summary() + "; seed " + std::to_string(grassmann_seed)};
    });
}

inline std::vector<std::function<CriterionResult()>> all_criteria() {
    return {criterion_bijection,     criterion_first_row,    criterion_row_bumping, criterion_counting,
            criterion_reductions,    criterion_straightening, criterion_independence, criterion_hilbert,
            criterion_codimension,   criterion_grassmann};
}

inline std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << r.detail << ", "
        << std::fixed;
    out.precision(2);
    out << r.seconds << " s)";
    return out.str();
}

}  // namespace weakpi::selftest
