#pragma once

// Exact integer combinatorics: binomials, Turan binomials, Macaulay-style
// canonical representations and the successor (shadow) bounds built on them.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagbal/errors.hpp"

namespace flagbal {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
concept ExactInteger = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { a % b } -> std::convertible_to<T>;
    { a < b } -> std::convertible_to<bool>;
    static_cast<double>(a);
    T(std::uint64_t{1});
};

// Number of colors a representation may use; unbounded gives plain binomials.
class ColorBudget {
public:
    constexpr ColorBudget() = default;

    static constexpr ColorBudget unbounded() { return ColorBudget{}; }
    static ColorBudget colors(std::uint64_t r) {
        detail::require(r > 0, "color budget must be positive");
        ColorBudget b;
        b.r_ = r;
        return b;
    }

    constexpr bool bounded() const { return r_ != 0; }
    constexpr std::uint64_t colors() const { return r_; }

    friend constexpr bool operator==(ColorBudget, ColorBudget) = default;

private:
    std::uint64_t r_ = 0;  // 0 encodes unbounded
};

template <ExactInteger Int = BigInt>
Int binom(const Int& n, std::uint32_t k) {
    if (n < Int(std::uint64_t{k})) return Int(std::uint64_t{0});
    std::uint32_t kk = k;
    const Int rest = n - Int(std::uint64_t{k});
    if (rest < Int(std::uint64_t{k})) kk = static_cast<std::uint32_t>(rest);
    Int result(std::uint64_t{1});
    for (std::uint32_t i = 1; i <= kk; ++i) {
        result *= n - Int(std::uint64_t{kk - i});
        result /= Int(std::uint64_t{i});
    }
    return result;
}

// Part sizes of the Turan graph T(n,r), largest first.
inline std::vector<std::uint64_t> turan_parts(std::uint64_t n, std::uint64_t r) {
    detail::require(r > 0, "turan_parts: r must be positive");
    const std::uint64_t q = n / r;
    const std::uint64_t big = n % r;
    std::vector<std::uint64_t> parts(r, q);
    std::fill_n(parts.begin(), big, q + 1);
    return parts;
}

// Number of k-cliques of T(n,r): the k-th elementary symmetric polynomial of
// the part sizes. With a parts of size q+1 and b = r-a parts of size q it is
// sum_j C(a,j) C(b,k-j) (q+1)^j q^(k-j).
template <ExactInteger Int = BigInt>
Int turan_binom(const Int& n, std::uint32_t k, std::uint64_t r) {
    detail::require(r > 0, "turan_binom: r must be positive");
    if (k == 0) return Int(std::uint64_t{1});
    if (k > r) return Int(std::uint64_t{0});
    const Int rr(r);
    const Int q = n / rr;
    const auto a = static_cast<std::uint64_t>(n % rr);
    const std::uint64_t b = r - a;
    const Int one(std::uint64_t{1});
    if (q == Int(std::uint64_t{0})) return binom<Int>(Int(a), k);

    const std::uint32_t j_lo = k > b ? static_cast<std::uint32_t>(k - b) : 0;
    const std::uint32_t j_hi = static_cast<std::uint32_t>(std::min<std::uint64_t>(a, k));
    if (j_hi < j_lo) return Int(std::uint64_t{0});

    // Walk j upward, updating each factor of the summand by its exact ratio.
    Int choose_a = binom<Int>(Int(a), j_lo);
    Int choose_b = binom<Int>(Int(b), k - j_lo);
    Int pow_big = one;
    Int pow_small = one;
    for (std::uint32_t i = 0; i < j_lo; ++i) pow_big *= q + one;
    for (std::uint32_t i = j_lo; i < k; ++i) pow_small *= q;

    Int total = choose_a * choose_b * pow_big * pow_small;
    for (std::uint32_t j = j_lo; j < j_hi; ++j) {
        choose_a = choose_a * Int(a - j) / Int(std::uint64_t{j + 1});
        choose_b = choose_b * Int(std::uint64_t{k - j}) / Int(b - k + j + 1);
        pow_big *= q + one;
        pow_small /= q;
        total += choose_a * choose_b * pow_big * pow_small;
    }
    return total;
}

template <ExactInteger Int = BigInt>
struct CanonicalTerm {
    Int n;
    std::uint32_t index;

    friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
};

// m = sum over terms of C(n_j, j), or of C(n_j, j)_{r-(k-j)} when bounded.
template <ExactInteger Int = BigInt>
struct CanonicalRep {
    std::uint32_t k = 1;
    ColorBudget budget;
    std::vector<CanonicalTerm<Int>> terms;

    // Color budget attached to the term at index j (r - (k - j)).
    std::uint64_t budget_at(std::uint32_t j) const { return budget.colors() - (k - j); }

    friend bool operator==(const CanonicalRep&, const CanonicalRep&) = default;
};

namespace detail {

template <ExactInteger Int>
Int term_value(const CanonicalRep<Int>& rep, const CanonicalTerm<Int>& t, std::uint32_t size) {
    if (!rep.budget.bounded()) return binom<Int>(t.n, size);
    return turan_binom<Int>(t.n, size, rep.budget_at(t.index));
}

// Largest x >= lo (and < hi when given) with f(x) <= target, for f
// non-decreasing and f(lo) <= target. Gallops from the guess, then bisects.
template <ExactInteger Int, class F>
Int largest_at_most(F&& f, const Int& target, const Int& lo, const std::optional<Int>& hi,
                    const std::optional<Int>& guess) {
    const Int one(std::uint64_t{1});
    Int start = lo;
    if (guess && lo < *guess) start = *guess;
    if (hi && !(start < *hi)) start = *hi - one;

    Int good = lo;
    std::optional<Int> bad = hi;
    if (!(target < f(start))) {
        good = start;
        Int step = one;
        for (;;) {
            const Int cand = good + step;
            if (bad && !(cand < *bad)) break;
            if (target < f(cand)) {
                bad = cand;
                break;
            }
            good = cand;
            step *= Int(std::uint64_t{2});
        }
    } else {
        bad = start;
        Int step = one;
        for (;;) {
            if (!(lo + step < *bad)) break;
            const Int cand = *bad - step;
            if (!(target < f(cand))) {
                good = cand;
                break;
            }
            bad = cand;
            step *= Int(std::uint64_t{2});
        }
    }
    if (!bad) invariant_failed("largest_at_most: unbounded search");
    while (one < *bad - good) {
        const Int mid = good + (*bad - good) / Int(std::uint64_t{2});
        if (target < f(mid))
            bad = mid;
        else
            good = mid;
    }
    return good;
}

// Floating-point estimate of the n solving C(n,k) = m, or of C(n,k)_r = m.
template <ExactInteger Int>
std::optional<Int> estimate_top(const Int& m, std::uint32_t k, std::uint64_t r) {
    const double md = static_cast<double>(m);
    if (!std::isfinite(md) || k > 150) return std::nullopt;
    const double kd = k;
    double est = std::pow(md * std::tgamma(kd + 1.0), 1.0 / kd) + (kd - 1.0) / 2.0;
    if (r != 0) {
        const double rd = static_cast<double>(r);
        const double choose_rk = std::exp(std::lgamma(rd + 1) - std::lgamma(kd + 1) - std::lgamma(rd - kd + 1));
        est = std::max(est, rd * std::pow(md / choose_rk, 1.0 / kd));
    }
    if (!std::isfinite(est) || est < 0 || est > 9.0e15) return std::nullopt;
    return Int(static_cast<std::uint64_t>(est));
}

}  // namespace detail

template <ExactInteger Int = BigInt>
Int evaluate(const CanonicalRep<Int>& rep) {
    Int sum(std::uint64_t{0});
    for (const auto& t : rep.terms) sum += detail::term_value(rep, t, t.index);
    return sum;
}

// Sum of C(n_j, j+1) (resp. Turan binomials): the largest c_{k+1} compatible
// with c_k = evaluate(rep).
template <ExactInteger Int = BigInt>
Int successor_bound(const CanonicalRep<Int>& rep) {
    Int sum(std::uint64_t{0});
    for (const auto& t : rep.terms) sum += detail::term_value(rep, t, t.index + 1);
    return sum;
}

// Checks the chain conditions that make a term list the canonical one:
// unbounded  n_k > n_{k-1} > ... > n_{k-s} >= k-s > 0,
// bounded    n_{k-i} - floor(n_{k-i}/(r-i)) > n_{k-i-1} and n_{k-s} >= k-s > 0.
template <ExactInteger Int = BigInt>
bool is_canonical(const CanonicalRep<Int>& rep) {
    if (rep.k == 0) return false;
    if (rep.budget.bounded() && rep.budget.colors() < rep.k) return false;
    const auto& terms = rep.terms;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].index != rep.k - i || terms[i].index == 0) return false;
    }
    if (terms.empty()) return true;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        const Int& hi = terms[i].n;
        const Int& next = terms[i + 1].n;
        if (rep.budget.bounded()) {
            const Int rho(rep.budget_at(terms[i].index));
            if (!(next < hi - hi / rho)) return false;
        } else if (!(next < hi)) {
            return false;
        }
    }
    return !(terms.back().n < Int(std::uint64_t{terms.back().index}));
}

namespace detail {

template <ExactInteger Int>
CanonicalRep<Int> greedy_canonical(const Int& m, std::uint32_t k, ColorBudget budget) {
    CanonicalRep<Int> rep{k, budget, {}};
    Int rest = m;
    const Int zero(std::uint64_t{0});
    std::uint32_t j = k;
    while (zero < rest) {
        ensure(j > 0, "canonical descent ran out of indices");
        const std::uint64_t rho = budget.bounded() ? rep.budget_at(j) : 0;
        auto value = [&](const Int& x) {
            return budget.bounded() ? turan_binom<Int>(x, j, rho) : binom<Int>(x, j);
        };
        const Int n = largest_at_most<Int>(value, rest, Int(std::uint64_t{j}), std::nullopt,
                                           estimate_top<Int>(rest, j, rho));
        rest -= value(n);
        rep.terms.push_back({n, j});
        --j;
    }
    ensure(is_canonical(rep), "greedy representation fails the canonical chain conditions");
    return rep;
}

}  // namespace detail

// k-canonical representation of m; m = 0 gives the empty term list.
template <ExactInteger Int = BigInt>
CanonicalRep<Int> kk_canonical(const Int& m, std::uint32_t k) {
    detail::require(k > 0, "kk_canonical: k must be positive");
    detail::require(!(m < Int(std::uint64_t{0})), "kk_canonical: m must be nonnegative");
    return detail::greedy_canonical<Int>(m, k, ColorBudget::unbounded());
}

template <ExactInteger Int = BigInt>
Int kk_shadow_bound(const Int& m, std::uint32_t k) {
    return successor_bound(kk_canonical<Int>(m, k));
}

// (k,r)-canonical representation of m.
template <ExactInteger Int = BigInt>
CanonicalRep<Int> ffk_canonical(const Int& m, std::uint32_t k, std::uint64_t r) {
    detail::require(k > 0, "ffk_canonical: k must be positive");
    detail::require(r >= k, "ffk_canonical: requires r >= k");
    detail::require(!(m < Int(std::uint64_t{0})), "ffk_canonical: m must be nonnegative");
    return detail::greedy_canonical<Int>(m, k, ColorBudget::colors(r));
}

// Largest c_{k+1} of an r-colorable complex with c_k = m.
template <ExactInteger Int = BigInt>
Int ffk_bound(const Int& m, std::uint32_t k, std::uint64_t r) {
    return successor_bound(ffk_canonical<Int>(m, k, r));
}

}  // namespace flagbal
