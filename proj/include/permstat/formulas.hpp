#pragma once

// Closed forms and generating-function extractions.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "format.hpp"
#include "hook.hpp"
#include "mpoly.hpp"
#include "ratfn.hpp"
#include "report.hpp"
#include "series.hpp"

namespace permstat {

/// D_n by D_n = (n-1)(D_{n-1} + D_{n-2}), D_0 = 1, D_1 = 0.
inline Integer derangement_number(int n) {
    if (n < 0) throw std::invalid_argument("derangement_number: negative n");
    Integer prev2 = 1, prev1 = 0;
    if (n == 0) return prev2;
    for (int k = 2; k <= n; ++k) {
        Integer next = Integer(k - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

inline Integer binomial(int m, int r) {
    if (m < 0 || r < 0 || r > m) return 0;
    Integer b = 1;
    for (int i = 1; i <= r; ++i) b = b * (m - r + i) / i;
    return b;
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---------------------------------------------------------------------------
// Maximal number of fixed points: M(a_1, ..., a_k)

inline constexpr int kDefaultMTotalBound = 12;

/// Coefficient of x_1^{a_1}...x_k^{a_k} in 1/((1+x_1)...(1+x_k)(1-x_1-...-x_k)).
inline Integer M_series(const Composition& a, int total_bound = kDefaultMTotalBound) {
    if (a.size() < 1) throw std::invalid_argument("M_series: empty composition");
    if (a.total() > total_bound) throw BoundExceeded("M_series: total exceeds bound");
    if (a.size() > kMaxVariables) throw BoundExceeded("M_series: more than eight parts");
    std::vector<std::string> names;
    for (int i = 1; i <= a.size(); ++i) names.push_back("x" + std::to_string(i));
    const Symbols xs = make_symbols(names);
    const IntPoly one = IntPoly::constant(xs, 1);
    std::vector<IntPoly> factors;
    IntPoly sum(xs);
    for (const auto& name : names) {
        const IntPoly x = IntPoly::variable(xs, name);
        factors.push_back(one + x);
        sum += x;
    }
    factors.push_back(one - sum);
    const IntPoly expansion = multivar_geometric_expand(factors, a.parts());
    return expansion.coefficient(a.parts());
}

/// M(a, b) = sum_{j=2}^{a+b} sum_{i=0}^{j} (-1)^j C(a+b-j, a-i), with C(m, r) = 0 outside 0 <= r <= m.
inline Integer M_two_block(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("M_two_block: block sizes must be positive");
    Integer total = 0;
    for (int j = 2; j <= a + b; ++j) {
        Integer inner = 0;
        for (int i = 0; i <= j; ++i) inner += binomial(a + b - j, a - i);
        total += (j % 2 == 0) ? inner : Integer(-inner);
    }
    return total;
}

/// Derangements of [l], l = a_1 + ... + a_k, whose descent set contains every
/// position of [l-1] except possibly the partial sums s_1, ..., s_{k-1}.
inline std::vector<Permutation> M_brute_witnesses(const Composition& a, int max_total = kDefaultMaxN) {
    if (a.size() < 1) throw std::invalid_argument("M_brute: empty composition");
    const int l = a.total();
    check_bound(l, max_total, "M_brute");
    std::uint64_t required = DescentSet::universe_mask(l);
    auto s = a.partial_sums();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) required &= ~(std::uint64_t{1} << s[i]);
    std::vector<Permutation> out;
    for_each_with_descent_pattern(l, required, 0, [&](std::span<const int> w) {
        if (fix_count(w) == 0) out.emplace_back(std::vector<int>(w.begin(), w.end()));
    });
    return out;
}

inline Integer M_brute(const Composition& a, int max_total = kDefaultMaxN) {
    return Integer(M_brute_witnesses(a, max_total).size());
}

/// Every composition of `total`, in lexicographic order of parts.
inline std::vector<Composition> compositions(int total) {
    std::vector<Composition> out;
    if (total < 1) return out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (total - 1)); ++mask) {
        out.push_back(Composition::from_descent_set(DescentSet(total, mask << 1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Four-variable generating polynomial A_n(s, t, q, Y) from its factorial
// generating function.

namespace detail {

inline const Symbols& stqYu() {
    static const Symbols v = make_symbols({"s", "t", "q", "Y", "u"});
    return v;
}

inline TruncSeries<RatFn> lift(const TruncSeries<IntPoly>& s, const FactorBasisPtr& basis) {
    std::vector<RatFn> coeffs;
    coeffs.reserve(s.coefficients().size());
    for (const auto& c : s.coefficients()) coeffs.emplace_back(basis, c);
    return TruncSeries<RatFn>(s.flavor(), s.variable(), std::move(coeffs));
}

}  // namespace detail

inline constexpr int kMaxANExtract = 7;

/// A_0, ..., A_N. For each r the summand
///   t^r (1 - sq)(u;q)_r (usq;q)_r / (((u;q)_r - sq (usq;q)_r) (uY;q)_{r+1})
/// is expanded as a u-series over Z[s,q,Y][1/(1 - sq)]. A_n is then
/// (t;q)_{n+1} * sum_r t^r [u^n](summand_r), cut to t-degree <= max(n-1, 0).
/// Summands with r beyond that window only reach higher t-degrees; one extra
/// row is computed and its t-coefficient must vanish.
inline std::vector<IntPoly> A_series(int N) {
    if (N < 0) throw std::invalid_argument("A_series: negative order");
    if (N > kMaxANExtract) throw BoundExceeded("A_series: order exceeds " + std::to_string(kMaxANExtract));
    const Symbols& U = detail::stqYu();
    const IntPoly one = IntPoly::constant(U, 1);
    const IntPoly s = IntPoly::variable(U, "s"), q = IntPoly::variable(U, "q"), t = IntPoly::variable(U, "t");
    const IntPoly Y = IntPoly::variable(U, "Y"), u = IntPoly::variable(U, "u");
    const IntPoly sq = s * q;
    const auto basis = make_factor_basis(U, {one - sq});

    const int rows = std::max(N, 1);  // r = 0..rows covers window plus guard for every n <= N
    // coeff[n][r] = [u^n] of summand r (without the t^r)
    std::vector<std::vector<RatFn>> coeff(static_cast<std::size_t>(N) + 1);
    for (int r = 0; r <= rows; ++r) {
        const IntPoly pu = q_pochhammer(u, "q", r, "u", N);
        const IntPoly pusq = q_pochhammer(u * sq, "q", r, "u", N);
        const IntPoly puY = q_pochhammer(u * Y, "q", r + 1, "u", N);
        const IntPoly numer = ((one - sq) * pu * pusq).truncated("u", N);
        const IntPoly denom = pu - sq * pusq;
        auto num_s = detail::lift(to_series(numer, "u", N), basis);
        auto den_s = detail::lift(to_series(denom, "u", N), basis);
        auto y_s = detail::lift(to_series(puY, "u", N), basis);
        auto summand = num_s * series_reciprocal(den_s) * series_reciprocal(y_s);
        for (int n = 0; n <= N; ++n) coeff[static_cast<std::size_t>(n)].push_back(summand[n]);
    }

    std::vector<IntPoly> out;
    for (int n = 0; n <= N; ++n) {
        const int window = std::max(n - 1, 0);
        RatFn sum(basis);
        for (int r = 0; r <= window + 1; ++r)
            sum += coeff[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] * one.shifted("t", r);
        // the denominator is free of t, so t-degrees can be read off the numerator
        const IntPoly full = sum.numerator() * q_pochhammer(t, "q", n + 1);
        if (!full.coefficient_of("t", window + 1).is_zero())
            throw std::logic_error("A_series: t-degree " + std::to_string(window + 1) + " survives at n = " +
                                   std::to_string(n));
        const RatFn a(basis, full.truncated("t", window), sum.denominator_content(), sum.factor_exponents());
        if (!a.is_polynomial()) throw std::logic_error("A_series: non-polynomial A_" + std::to_string(n));
        const IntPoly p = a.as_polynomial();
        if (!p.all_coefficients_nonnegative())
            throw std::logic_error("A_series: negative coefficient in A_" + std::to_string(n));
        out.push_back(rebase(p, vars::stqY()));
    }
    return out;
}

inline IntPoly A_n_extract(int n) {
    if (n < 0) throw std::invalid_argument("A_n_extract: negative n");
    return A_series(n).back();
}

/// sum over S_n of s^exc t^des q^maj Y^fix by enumeration.
inline IntPoly A_n_brute(int n, unsigned threads = 1, int max_n = kDefaultMaxN) {
    check_bound(n, max_n, "A_n_brute");
    const std::vector<std::pair<Stat, std::string>> bind{
        {Stat::exc, "s"}, {Stat::des, "t"}, {Stat::maj, "q"}, {Stat::fix, "Y"}};
    auto b = parallel_fold_permutations(
        n, threads, GenPolyBuilder(vars::stqY(), bind), [](GenPolyBuilder& acc, std::span<const int> w) { acc.add(w); },
        [](GenPolyBuilder& acc, const GenPolyBuilder& part) { acc.merge(part); });
    return b.to_poly();
}

// ---------------------------------------------------------------------------
// Zero versus one fixed point, refined by des and maj

/// r_{2k} = s^k t^{2k-1} q^{k(2k-1)} (k >= 1), r_{2k+1} = -s^k t^{2k} q^{k(2k+1)} (k >= 0).
inline IntPoly r_small(int n) {
    if (n < 1) throw std::invalid_argument("r_small: n must be positive");
    const int k = n / 2;
    const Symbols& v = vars::stq();
    if (n % 2 == 0) return IntPoly::monomial(v, Monomial::from_exponents({k, 2 * k - 1, k * (2 * k - 1)}));
    return IntPoly::monomial(v, Monomial::from_exponents({k, 2 * k, k * (2 * k + 1)}), Integer(-1));
}

struct FixedPointSplit {
    IntPoly zero;  // derangements
    IntPoly one;   // exactly one fixed point
};

/// s^exc t^des q^maj summed over D_0(n) and over D_1(n).
inline FixedPointSplit fixed_point_split(int n, unsigned threads = 1, int max_n = kDefaultMaxN) {
    check_bound(n, max_n, "fixed_point_split");
    const std::vector<std::pair<Stat, std::string>> bind{{Stat::exc, "s"}, {Stat::des, "t"}, {Stat::maj, "q"}};
    using Pair = std::pair<GenPolyBuilder, GenPolyBuilder>;
    const GenPolyBuilder empty(vars::stq(), bind);
    auto acc = parallel_fold_permutations(
        n, threads, Pair(empty, empty),
        [](Pair& a, std::span<const int> w) {
            const int f = fix_count(w);
            if (f == 0) a.first.add(w);
            else if (f == 1) a.second.add(w);
        },
        [](Pair& a, const Pair& part) {
            a.first.merge(part.first);
            a.second.merge(part.second);
        });
    return {acc.first.to_poly(), acc.second.to_poly()};
}

inline IntPoly s_minus_one(const Symbols& v) { return IntPoly::variable(v, "s") - IntPoly::constant(v, 1); }

struct Thm13Result {
    IntPoly difference;  // D_0 sum minus D_1 sum
    IntPoly remainder;   // r_n
    IntPoly quotient;    // Q_n(s,t,q)
    Report report;
};

inline Thm13Result verify_thm13(int n, unsigned threads = 1, int max_n = kDefaultMaxN) {
    const auto split = fixed_point_split(n, threads, max_n);
    Thm13Result res{split.zero - split.one, r_small(n), IntPoly(vars::stq()), Report("thm13 n=" + std::to_string(n))};
    const IntPoly rest = res.difference - res.remainder;
    auto q = exact_div(rest, s_minus_one(vars::stq()));
    res.report.expect(q.has_value(), [&] { return "(s-1) does not divide " + rest.to_string(); });
    if (q) {
        res.quotient = *q;
        res.report.expect(q->all_coefficients_nonnegative(), [&] { return "negative coefficient in " + q->to_string(); });
    }
    res.report.poly("difference", res.difference);
    res.report.poly("r", res.remainder);
    res.report.poly("Q", res.quotient);
    return res;
}

/// The identity combining the last two results, coefficientwise in u: the
/// Y-free part of A_n minus its Y-linear part equals (s-1) Q_n + r_n.
inline Report fixed_point_series_consistency(int N, unsigned threads = 1) {
    Report rep("fixed-point series consistency N=" + std::to_string(N));
    const auto as = A_series(N);
    for (int n = 1; n <= N; ++n) {
        const IntPoly a0 = rebase(as[static_cast<std::size_t>(n)].coefficient_of("Y", 0), vars::stq());
        const IntPoly a1 = rebase(as[static_cast<std::size_t>(n)].coefficient_of("Y", 1), vars::stq());
        const auto t13 = verify_thm13(n, threads);
        rep.absorb(t13.report);
        const IntPoly rhs = s_minus_one(vars::stq()) * t13.quotient + t13.remainder;
        rep.expect(a0 - a1 == rhs, [&, n] { return "n=" + std::to_string(n) + ": " + (a0 - a1).to_string() + " vs " + rhs.to_string(); });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exponential expansion at t = q = 1

/// Q_0(s), ..., Q_N(s): coefficients of u^n/n! in
///   (u-1)/(s e^{us} - s^2 e^u) - (e^{u sqrt s}/(sqrt s + 1) + e^{-u sqrt s}/(sqrt s - 1)) / (2 s sqrt s).
/// Pairing the two exponentials removes sqrt s: the second term contributes
/// s^{m/2}/(s(s-1)) at even m and -s^{(m-1)/2}/(s(s-1)) at odd m.
inline std::vector<IntPoly> H_expand(int N) {
    if (N < 0) throw std::invalid_argument("H_expand: negative order");
    if (N > 40) throw BoundExceeded("H_expand: order exceeds 40");
    const Symbols& v = vars::s();
    const IntPoly one = IntPoly::constant(v, 1);
    const IntPoly s = IntPoly::variable(v, "s");
    const auto basis = make_factor_basis(v, {s, s - one});

    TruncSeries<RatFn> num(SeriesFlavor::Exponential, "u", N, RatFn(basis));
    num[0] = RatFn::constant(basis, -1);
    if (N >= 1) num[1] = RatFn::constant(basis, 1);
    TruncSeries<RatFn> den(SeriesFlavor::Exponential, "u", N, RatFn(basis));
    for (int n = 0; n <= N; ++n) den[n] = RatFn(basis, s.shifted("s", n) - s * s);
    const auto first = num * series_reciprocal(den);

    std::vector<IntPoly> out;
    for (int m = 0; m <= N; ++m) {
        RatFn second(basis, one.shifted("s", m / 2), Integer(1), {1, 1});
        if (m % 2 == 1) second = -second;
        const RatFn q = first[m] - second;
        if (!q.is_polynomial())
            throw std::logic_error("H_expand: coefficient " + std::to_string(m) + " is not a polynomial: " + q.to_string());
        out.push_back(q.as_polynomial());
    }
    return out;
}

/// sum over 2 <= 2k <= n-1 of k * n(n-1)...(2k+2).
inline Integer Q1_formula(int n) {
    if (n < 1) throw std::invalid_argument("Q1_formula: n must be positive");
    Integer total = 0;
    for (int k = 1; 2 * k <= n - 1; ++k) {
        Integer prod = 1;
        for (int j = 2 * k + 2; j <= n; ++j) prod *= j;
        total += prod * k;
    }
    return total;
}

struct TypeCounts {
    std::int64_t a0 = 0;
    std::int64_t b0 = 0;
    std::int64_t excluded = 0;  // desarrangements outside both classes
    std::int64_t desarrangements = 0;
};

/// Classifies every desarrangement of S_n. The decreasing permutation of even
/// length is the only desarrangement with IDES = [n-1] and lands in `excluded`.
inline TypeCounts type_counts(int n, unsigned threads = 1, int max_n = kDefaultMaxN) {
    check_bound(n, max_n, "type_counts");
    return parallel_fold_permutations(
        n, threads, TypeCounts{},
        [](TypeCounts& c, std::span<const int> w) {
            if (!is_desarrangement(w)) return;
            ++c.desarrangements;
            switch (classify_strict(w)) {
                case RotationClass::A0: ++c.a0; break;
                case RotationClass::B0: ++c.b0; break;
                default: ++c.excluded; break;
            }
        },
        [](TypeCounts& acc, const TypeCounts& p) {
            acc.a0 += p.a0;
            acc.b0 += p.b0;
            acc.excluded += p.excluded;
            acc.desarrangements += p.desarrangements;
        });
}

inline std::int64_t typeB_count(int n, unsigned threads = 1, int max_n = kDefaultMaxN) {
    return type_counts(n, threads, max_n).b0;
}

}  // namespace permstat
