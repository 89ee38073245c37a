#pragma once

// Truncated power series in one distinguished variable u, q-Pochhammer
// products, and truncated expansions of reciprocals of polynomials.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"
#include "ratfn.hpp"

namespace permstat {

/// Ordinary: c_n multiplies u^n. Exponential: c_n multiplies u^n / n!.
enum class SeriesFlavor { Ordinary, Exponential };

namespace detail {

inline Integer reciprocal_of(const Integer& c) {
    if (c != 1 && c != -1) throw std::domain_error("series_reciprocal: constant term is not a unit");
    return c;
}
inline Rational reciprocal_of(const Rational& c) {
    if (c == 0) throw std::domain_error("series_reciprocal: zero constant term");
    return 1 / c;
}
inline RatFn reciprocal_of(const RatFn& c) {
    if (c.is_zero()) throw std::domain_error("series_reciprocal: zero constant term");
    return c.inverse();
}
template <class C>
MPoly<C> reciprocal_of(const MPoly<C>& c) {
    if (!c.is_constant()) throw std::domain_error("series_reciprocal: constant term is not a unit");
    return MPoly<C>::constant(c.symbols(), reciprocal_of(c.constant_term()));
}

inline bool is_zero(const Integer& c) { return c == 0; }
inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const RatFn& c) { return c.is_zero(); }
template <class C>
bool is_zero(const MPoly<C>& c) {
    return c.is_zero();
}

// Row n of Pascal's triangle.
inline std::vector<Integer> binomial_row(int n) {
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = i; k >= 1; --k) row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) - 1];
    return row;
}

}  // namespace detail

template <class C>
class TruncSeries {
public:
    TruncSeries(SeriesFlavor flavor, std::string var, int order, const C& zero)
        : flavor_(flavor), var_(std::move(var)), coeffs_(checked_length(order), zero) {}
    TruncSeries(SeriesFlavor flavor, std::string var, std::vector<C> coeffs)
        : flavor_(flavor), var_(std::move(var)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: needs at least the constant coefficient");
    }

    [[nodiscard]] SeriesFlavor flavor() const { return flavor_; }
    [[nodiscard]] const std::string& variable() const { return var_; }
    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<C>& coefficients() const { return coeffs_; }

    const C& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    C& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    TruncSeries& operator+=(const TruncSeries& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    template <class S>
    TruncSeries scaled(const S& factor) const {
        TruncSeries r = *this;
        for (auto& c : r.coeffs_) c = c * factor;
        return r;
    }

    /// Cauchy product for ordinary series, binomial convolution for exponential ones.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_compatible(b);
        TruncSeries r = a;
        for (int n = 0; n <= a.order(); ++n) {
            const auto binom = a.flavor_ == SeriesFlavor::Exponential ? detail::binomial_row(n) : std::vector<Integer>{};
            C acc = a.coeffs_[0] * b.coeffs_[static_cast<std::size_t>(n)];
            if (!binom.empty()) acc = acc * binom[0];
            for (int k = 1; k <= n; ++k) {
                const auto& ak = a.coeffs_[static_cast<std::size_t>(k)];
                const auto& bk = b.coeffs_[static_cast<std::size_t>(n - k)];
                if (detail::is_zero(ak) || detail::is_zero(bk)) continue;
                if (binom.empty())
                    acc += ak * bk;
                else
                    acc += (ak * bk) * binom[static_cast<std::size_t>(k)];
            }
            r.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.flavor_ == b.flavor_ && a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

    void require_compatible(const TruncSeries& o) const {
        if (flavor_ != o.flavor_) throw std::invalid_argument("TruncSeries: ordinary and exponential series do not mix");
        if (var_ != o.var_) throw std::invalid_argument("TruncSeries: series variables differ");
        if (coeffs_.size() != o.coeffs_.size()) throw std::invalid_argument("TruncSeries: truncation orders differ");
    }

private:
    static std::size_t checked_length(int order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
        return static_cast<std::size_t>(order) + 1;
    }

    SeriesFlavor flavor_;
    std::string var_;
    std::vector<C> coeffs_;
};

template <class C>
TruncSeries<C> series_mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    return a * b;
}

/// Multiplicative inverse up to the truncation order. Requires an invertible
/// constant coefficient.
template <class C>
TruncSeries<C> series_reciprocal(const TruncSeries<C>& a) {
    if (detail::is_zero(a[0])) throw std::domain_error("series_reciprocal: zero constant term");
    const bool exponential = a.flavor() == SeriesFlavor::Exponential;
    TruncSeries<C> b = a;
    const C inv0 = detail::reciprocal_of(a[0]);
    b[0] = inv0;
    for (int n = 1; n <= a.order(); ++n) {
        const auto binom = exponential ? detail::binomial_row(n) : std::vector<Integer>{};
        C acc = a[n] * b[0];
        if (exponential) acc = acc * binom[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k) {
            if (detail::is_zero(a[k]) || detail::is_zero(b[n - k])) continue;
            if (exponential)
                acc += (a[k] * b[n - k]) * binom[static_cast<std::size_t>(k)];
            else
                acc += a[k] * b[n - k];
        }
        b[n] = -(acc * inv0);
    }
    return b;
}

/// Splits a polynomial by powers of var into an ordinary series truncated at
/// the given order; coefficients keep the same variable universe with var zeroed.
inline TruncSeries<IntPoly> to_series(const IntPoly& p, const std::string& var, int order) {
    TruncSeries<IntPoly> s(SeriesFlavor::Ordinary, var, order, IntPoly(p.symbols()));
    for (int n = 0; n <= order; ++n) s[n] = p.coefficient_of(var, n);
    return s;
}

/// (z; q)_m = (1 - z)(1 - zq)...(1 - zq^{m-1}). When truncate_var is given,
/// terms of degree above truncate_degree in that variable are dropped as the
/// product is built.
inline IntPoly q_pochhammer(const IntPoly& z, const std::string& q, int m, const std::string& truncate_var = {},
                            int truncate_degree = 0) {
    if (m < 0) throw std::invalid_argument("q_pochhammer: negative length");
    const auto& vars = z.symbols();
    IntPoly result = IntPoly::constant(vars, 1);
    const IntPoly one = IntPoly::constant(vars, 1);
    for (int k = 0; k < m; ++k) {
        result *= one - z.shifted(q, k);
        if (!truncate_var.empty()) result = result.truncated(truncate_var, truncate_degree);
    }
    return result;
}

/// Drops terms whose exponent in variable i exceeds bounds[i].
inline IntPoly truncate_to_box(const IntPoly& p, const std::vector<int>& bounds) {
    std::vector<IntPoly::Term> kept;
    for (const auto& t : p.terms()) {
        bool inside = true;
        for (std::size_t i = 0; i < bounds.size() && inside; ++i) inside = t.first.exponent(static_cast<int>(i)) <= bounds[i];
        if (inside) kept.push_back(t);
    }
    return IntPoly::from_terms(p.symbols(), std::move(kept));
}

/// Expansion of 1 / (f_1 f_2 ... f_k), each f_i with constant term +1 or -1,
/// truncated to exponents <= bounds[i] in variable i. Each reciprocal is the
/// geometric series c (1 + g + g^2 + ...) with f = c(1 - g).
inline IntPoly multivar_geometric_expand(const std::vector<IntPoly>& factors, const std::vector<int>& bounds) {
    if (factors.empty()) throw std::invalid_argument("multivar_geometric_expand: no factors");
    const auto& vars = factors.front().symbols();
    if (bounds.size() != vars->size()) throw std::invalid_argument("multivar_geometric_expand: one bound per variable");
    const IntPoly one = IntPoly::constant(vars, 1);
    IntPoly result = one;
    for (const auto& f : factors) {
        const Integer c0 = f.constant_term();
        if (c0 != 1 && c0 != -1) throw std::domain_error("multivar_geometric_expand: constant term must be +1 or -1");
        const IntPoly g = one - f * c0;  // f = c0 (1 - g)
        IntPoly inv = one;
        IntPoly power = one;
        while (true) {
            power = truncate_to_box(power * g, bounds);
            if (power.is_zero()) break;
            inv += power;
        }
        result = truncate_to_box(result * (inv * c0), bounds);
    }
    return result;
}

}  // namespace permstat
