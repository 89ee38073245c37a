#pragma once

// Rational functions whose denominators are products of factors from a
// declared basis, times a positive integer. Numerators are integer
// polynomials; the integer part of the denominator carries rational
// constants. Needing a division outside the basis is an error.

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"

namespace permstat {

class FactorBasis {
public:
    FactorBasis(Symbols vars, std::vector<IntPoly> factors) : vars_(std::move(vars)), factors_(std::move(factors)) {
        for (const auto& f : factors_) {
            f.require_same_universe(IntPoly(vars_));
            if (f.is_constant()) throw std::invalid_argument("FactorBasis: factors must be non-constant");
        }
    }

    [[nodiscard]] const Symbols& symbols() const { return vars_; }
    [[nodiscard]] int size() const { return static_cast<int>(factors_.size()); }
    [[nodiscard]] const IntPoly& factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }

    /// Product of factor(i)^exponents[i].
    [[nodiscard]] IntPoly power_product(const std::vector<int>& exponents) const {
        IntPoly p = IntPoly::constant(vars_, 1);
        for (int i = 0; i < size(); ++i)
            for (int e = 0; e < exponents[static_cast<std::size_t>(i)]; ++e) p *= factor(i);
        return p;
    }

private:
    Symbols vars_;
    std::vector<IntPoly> factors_;
};

using FactorBasisPtr = std::shared_ptr<const FactorBasis>;

inline FactorBasisPtr make_factor_basis(Symbols vars, std::vector<IntPoly> factors) {
    return std::make_shared<const FactorBasis>(std::move(vars), std::move(factors));
}

class RatFn {
public:
    explicit RatFn(FactorBasisPtr basis)
        : basis_(std::move(basis)), num_(basis_->symbols()), exps_(static_cast<std::size_t>(basis_->size()), 0) {}
    RatFn(FactorBasisPtr basis, IntPoly numerator) : RatFn(std::move(basis)) {
        numerator.require_same_universe(num_);
        num_ = std::move(numerator);
    }
    RatFn(FactorBasisPtr basis, IntPoly numerator, Integer den, std::vector<int> exponents)
        : basis_(std::move(basis)), num_(std::move(numerator)), den_(std::move(den)), exps_(std::move(exponents)) {
        if (den_ == 0) throw std::domain_error("RatFn: zero denominator");
        if (exps_.size() != static_cast<std::size_t>(basis_->size())) throw std::invalid_argument("RatFn: exponent arity");
        if (std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; }))
            throw std::invalid_argument("RatFn: negative factor exponent");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        normalize();
    }

    static RatFn constant(FactorBasisPtr basis, const Integer& c) {
        auto vars = basis->symbols();
        return RatFn(std::move(basis), IntPoly::constant(std::move(vars), c));
    }
    static RatFn rational(FactorBasisPtr basis, const Integer& num, const Integer& den) {
        auto vars = basis->symbols();
        const auto k = static_cast<std::size_t>(basis->size());
        return RatFn(std::move(basis), IntPoly::constant(std::move(vars), num), den, std::vector<int>(k, 0));
    }

    [[nodiscard]] const FactorBasisPtr& basis() const { return basis_; }
    [[nodiscard]] const IntPoly& numerator() const { return num_; }
    [[nodiscard]] const Integer& denominator_content() const { return den_; }
    [[nodiscard]] const std::vector<int>& factor_exponents() const { return exps_; }
    [[nodiscard]] IntPoly denominator() const { return basis_->power_product(exps_) * den_; }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const {
        return den_ == 1 && std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }
    [[nodiscard]] IntPoly as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("RatFn: not a polynomial: " + to_string());
        return num_;
    }

    /// Multiplicative inverse. The numerator must factor over the basis up to an
    /// integer constant.
    [[nodiscard]] RatFn inverse() const {
        if (is_zero()) throw std::domain_error("RatFn: inverse of zero");
        IntPoly rest = num_;
        std::vector<int> num_exps(exps_.size(), 0);
        for (int i = 0; i < basis_->size(); ++i) {
            while (!rest.is_constant()) {
                auto q = exact_div(rest, basis_->factor(i));
                if (!q) break;
                rest = std::move(*q);
                ++num_exps[static_cast<std::size_t>(i)];
            }
        }
        if (!rest.is_constant())
            throw std::domain_error("RatFn: inverse needs a division outside the factor basis: " + num_.to_string());
        const Integer c = rest.constant_term();
        IntPoly new_num = basis_->power_product(exps_) * den_;
        return RatFn(basis_, std::move(new_num), c, std::move(num_exps));
    }

    RatFn& operator+=(const RatFn& o) { return *this = combine(*this, o, false); }
    RatFn& operator-=(const RatFn& o) { return *this = combine(*this, o, true); }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator*=(const Integer& c) {
        if (c == 0) return *this = RatFn(basis_);
        num_ *= c;
        normalize_content();
        return *this;
    }
    RatFn& operator*=(const IntPoly& p) {
        num_ *= p;
        normalize();
        return *this;
    }

    friend RatFn operator+(const RatFn& a, const RatFn& b) { return combine(a, b, false); }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return combine(a, b, true); }
    friend RatFn operator-(RatFn a) {
        a.num_ = -a.num_;
        return a;
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        a.require_same_basis(b);
        if (a.is_zero() || b.is_zero()) return RatFn(a.basis_);
        std::vector<int> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
        return RatFn(a.basis_, a.num_ * b.num_, a.den_ * b.den_, std::move(e));
    }
    friend RatFn operator*(RatFn a, const Integer& c) { return a *= c; }
    friend RatFn operator*(RatFn a, const IntPoly& p) { return a *= p; }
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        a.require_same_basis(b);
        // cross-multiplication is independent of how far cancellation went
        return a.num_ * b.denominator() == b.num_ * a.denominator();
    }

    [[nodiscard]] std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        std::string den;
        if (den_ != 1) den = den_.str();
        for (int i = 0; i < basis_->size(); ++i) {
            const int e = exps_[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!den.empty()) den += '*';
            den += '(' + basis_->factor(i).to_string() + ')';
            if (e > 1) den += '^' + std::to_string(e);
        }
        return '(' + num_.to_string() + ")/" + den;
    }

private:
    void require_same_basis(const RatFn& o) const {
        if (basis_ != o.basis_) throw std::invalid_argument("RatFn: factor bases differ");
    }

    static RatFn combine(const RatFn& a, const RatFn& b, bool subtract) {
        a.require_same_basis(b);
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        std::vector<int> e(a.exps_.size());
        std::vector<int> ea(e.size()), eb(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = std::max(a.exps_[i], b.exps_[i]);
            ea[i] = e[i] - a.exps_[i];
            eb[i] = e[i] - b.exps_[i];
        }
        const Integer l = boost::multiprecision::lcm(a.den_, b.den_);
        IntPoly na = a.num_ * Integer(l / a.den_);
        IntPoly nb = b.num_ * Integer(l / b.den_);
        if (std::any_of(ea.begin(), ea.end(), [](int x) { return x > 0; })) na *= a.basis_->power_product(ea);
        if (std::any_of(eb.begin(), eb.end(), [](int x) { return x > 0; })) nb *= a.basis_->power_product(eb);
        return RatFn(a.basis_, subtract ? na - nb : na + nb, l, std::move(e));
    }

    // Removes every basis factor that divides the numerator, then the common
    // integer content.
    void normalize() {
        if (num_.is_zero()) {
            std::fill(exps_.begin(), exps_.end(), 0);
            den_ = 1;
            return;
        }
        for (int i = 0; i < basis_->size(); ++i) {
            auto& e = exps_[static_cast<std::size_t>(i)];
            while (e > 0) {
                auto q = exact_div(num_, basis_->factor(i));
                if (!q) break;
                num_ = std::move(*q);
                --e;
            }
        }
        normalize_content();
    }

    void normalize_content() {
        if (den_ == 1) return;
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        Integer g = boost::multiprecision::gcd(content(num_), den_);
        if (g != 1) {
            IntPoly reduced(num_.symbols());
            std::vector<IntPoly::Term> terms;
            terms.reserve(num_.size());
            for (const auto& [m, c] : num_.terms()) terms.emplace_back(m, Integer(c / g));
            num_ = IntPoly::from_terms(num_.symbols(), std::move(terms));
            den_ /= g;
        }
    }

    FactorBasisPtr basis_;
    IntPoly num_;
    Integer den_ = 1;
    std::vector<int> exps_;
};

inline std::ostream& operator<<(std::ostream& os, const RatFn& r) { return os << r.to_string(); }

}  // namespace permstat
