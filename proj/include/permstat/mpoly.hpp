#pragma once

// Sparse multivariate polynomials with exact coefficients.
//
// Exponent vectors are packed into one 64-bit word: up to eight variables,
// each exponent in [0, 255], variable 0 in the most significant byte. With
// that layout, lexicographic comparison of exponent vectors is plain integer
// comparison, and multiplying monomials is integer addition. Terms are kept
// sorted in descending graded-lex order with no zero coefficients, so that
// equality and printing are canonical.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Integer> {
    static bool divide_exact(const Integer& a, const Integer& b, Integer& q) {
        if (b == 0) return false;
        Integer r;
        boost::multiprecision::divide_qr(a, b, q, r);
        return r == 0;
    }
    static std::string to_string(const Integer& c) { return c.str(); }
};

template <>
struct CoeffTraits<Rational> {
    static bool divide_exact(const Rational& a, const Rational& b, Rational& q) {
        if (b == 0) return false;
        q = a / b;
        return true;
    }
    static std::string to_string(const Rational& c) { return c.str(); }
};

inline constexpr int kMaxVariables = 8;
inline constexpr int kMaxExponent = 255;

class Monomial {
public:
    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

    static Monomial from_exponents(const std::vector<int>& e) {
        if (e.size() > static_cast<std::size_t>(kMaxVariables)) throw std::out_of_range("Monomial: too many variables");
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] > kMaxExponent) throw std::overflow_error("Monomial: exponent out of range");
            bits |= static_cast<std::uint64_t>(e[i]) << shift(static_cast<int>(i));
        }
        return Monomial(bits);
    }
    static Monomial variable(int index, int power = 1) {
        if (index < 0 || index >= kMaxVariables) throw std::out_of_range("Monomial: variable index");
        if (power < 0 || power > kMaxExponent) throw std::overflow_error("Monomial: exponent out of range");
        return Monomial(static_cast<std::uint64_t>(power) << shift(index));
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] int exponent(int index) const { return static_cast<int>((bits_ >> shift(index)) & 0xFFu); }

    [[nodiscard]] int degree() const {
        std::uint64_t x = (bits_ & 0x00FF00FF00FF00FFull) + ((bits_ >> 8) & 0x00FF00FF00FF00FFull);
        x = (x & 0x0000FFFF0000FFFFull) + ((x >> 16) & 0x0000FFFF0000FFFFull);
        x = (x & 0xFFFFFFFFull) + (x >> 32);
        return static_cast<int>(x);
    }

    [[nodiscard]] Monomial with_exponent(int index, int e) const {
        if (e < 0 || e > kMaxExponent) throw std::overflow_error("Monomial: exponent out of range");
        const std::uint64_t mask = std::uint64_t{0xFF} << shift(index);
        return Monomial((bits_ & ~mask) | (static_cast<std::uint64_t>(e) << shift(index)));
    }

    /// Caller guarantees no exponent overflows.
    [[nodiscard]] constexpr Monomial times(Monomial o) const { return Monomial(bits_ + o.bits_); }

    [[nodiscard]] bool divides(Monomial o) const {
        for (int i = 0; i < kMaxVariables; ++i)
            if (exponent(i) > o.exponent(i)) return false;
        return true;
    }
    /// o / *this; caller guarantees divisibility.
    [[nodiscard]] constexpr Monomial quotient_of(Monomial o) const { return Monomial(o.bits_ - bits_); }

    friend constexpr bool operator==(Monomial, Monomial) = default;

    /// Graded-lex: higher total degree first, ties broken lexicographically.
    static bool graded_lex_greater(Monomial a, Monomial b) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.bits_ > b.bits_;
    }

    static constexpr int shift(int index) { return 8 * (kMaxVariables - 1 - index); }

private:
    std::uint64_t bits_ = 0;
};

/// Ordered variable names shared between polynomials of one computation.
using Symbols = std::shared_ptr<const std::vector<std::string>>;

inline Symbols make_symbols(std::vector<std::string> names) {
    if (names.size() > static_cast<std::size_t>(kMaxVariables)) throw std::out_of_range("make_symbols: at most eight variables");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw std::invalid_argument("make_symbols: duplicate variable " + names[i]);
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

template <class Coeff>
class MPoly {
public:
    using coeff_type = Coeff;
    using Term = std::pair<Monomial, Coeff>;

    MPoly() : vars_(make_symbols({})) {}
    explicit MPoly(Symbols vars) : vars_(std::move(vars)) {}

    static MPoly constant(Symbols vars, Coeff c) {
        MPoly p(std::move(vars));
        if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
        return p;
    }
    static MPoly monomial(Symbols vars, Monomial m, Coeff c = Coeff(1)) {
        MPoly p(std::move(vars));
        if (c != 0) p.terms_.emplace_back(m, std::move(c));
        return p;
    }
    static MPoly variable(Symbols vars, const std::string& name, int power = 1) {
        const int idx = index_in(*vars, name);
        return monomial(std::move(vars), Monomial::variable(idx, power));
    }
    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static MPoly from_terms(Symbols vars, std::vector<Term> terms) {
        MPoly p(std::move(vars));
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    [[nodiscard]] const Symbols& symbols() const { return vars_; }
    [[nodiscard]] const std::vector<std::string>& variables() const { return *vars_; }
    [[nodiscard]] int nvars() const { return static_cast<int>(vars_->size()); }
    [[nodiscard]] int var_index(const std::string& name) const { return index_in(*vars_, name); }

    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.bits() == 0); }
    [[nodiscard]] Coeff constant_term() const {
        if (!terms_.empty() && terms_.back().first.bits() == 0) return terms_.back().second;
        return Coeff(0);
    }
    [[nodiscard]] const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("MPoly: zero polynomial has no leading term");
        return terms_.front();
    }

    [[nodiscard]] Coeff coefficient(Monomial m) const {
        for (const auto& [mono, c] : terms_)
            if (mono == m) return c;
        return Coeff(0);
    }
    [[nodiscard]] Coeff coefficient(const std::vector<int>& exponents) const {
        return coefficient(Monomial::from_exponents(exponents));
    }

    [[nodiscard]] int degree_in(int index) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.exponent(index));
        return d;
    }
    [[nodiscard]] int degree_in(const std::string& name) const { return degree_in(var_index(name)); }
    [[nodiscard]] int min_degree_in(int index) const {
        if (terms_.empty()) return 0;
        int d = kMaxExponent;
        for (const auto& t : terms_) d = std::min(d, t.first.exponent(index));
        return d;
    }
    [[nodiscard]] int total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

    /// Coefficient of var^k, as a polynomial with that variable's exponent zeroed.
    [[nodiscard]] MPoly coefficient_of(const std::string& name, int k) const {
        const int idx = var_index(name);
        std::vector<Term> out;
        for (const auto& [m, c] : terms_)
            if (m.exponent(idx) == k) out.emplace_back(m.with_exponent(idx, 0), c);
        return from_terms(vars_, std::move(out));
    }

    /// Drops every term whose exponent in var exceeds max_degree.
    [[nodiscard]] MPoly truncated(const std::string& name, int max_degree) const {
        const int idx = var_index(name);
        MPoly p(vars_);
        for (const auto& t : terms_)
            if (t.first.exponent(idx) <= max_degree) p.terms_.push_back(t);
        return p;
    }

    /// Substitutes var := value.
    [[nodiscard]] MPoly substitute(const std::string& name, const Coeff& value) const {
        const int idx = var_index(name);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            Coeff v = c;
            for (int e = m.exponent(idx); e > 0; --e) v *= value;
            out.emplace_back(m.with_exponent(idx, 0), std::move(v));
        }
        return from_terms(vars_, std::move(out));
    }

    /// Value with every variable set to the given numbers (in variable order).
    [[nodiscard]] Coeff evaluate(const std::vector<Coeff>& point) const {
        if (point.size() != vars_->size()) throw std::invalid_argument("MPoly::evaluate: arity mismatch");
        Coeff total = 0;
        for (const auto& [m, c] : terms_) {
            Coeff v = c;
            for (int i = 0; i < nvars(); ++i)
                for (int e = m.exponent(i); e > 0; --e) v *= point[static_cast<std::size_t>(i)];
            total += v;
        }
        return total;
    }

    /// Multiplies by var^k.
    [[nodiscard]] MPoly shifted(const std::string& name, int k) const {
        const int idx = var_index(name);
        MPoly p(vars_);
        p.terms_.reserve(terms_.size());
        const Monomial step = Monomial::variable(idx, k);
        for (const auto& [m, c] : terms_) {
            if (m.exponent(idx) + k > kMaxExponent) throw std::overflow_error("MPoly: exponent overflow");
            p.terms_.emplace_back(m.times(step), c);
        }
        return p;  // shifting preserves graded-lex order
    }

    [[nodiscard]] bool all_coefficients_nonnegative() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
    }

    MPoly& operator+=(const MPoly& o) { return *this = add(*this, o, false); }
    MPoly& operator-=(const MPoly& o) { return *this = add(*this, o, true); }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Coeff& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.second *= c;
        }
        return *this;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return add(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return add(a, b, true); }
    friend MPoly operator-(MPoly a) {
        for (auto& t : a.terms_) t.second = -t.second;
        return a;
    }
    friend MPoly operator*(MPoly a, const Coeff& c) { return a *= c; }
    friend MPoly operator*(const Coeff& c, MPoly a) { return a *= c; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_same_universe(b);
        if (a.is_zero() || b.is_zero()) return MPoly(a.vars_);
        check_product_exponents(a, b);
        if (b.terms_.size() == 1) return scaled_by_term(a, b.terms_[0]);
        if (a.terms_.size() == 1) return scaled_by_term(b, a.terms_[0]);
        std::unordered_map<std::uint64_t, Coeff> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        Coeff tmp;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                tmp = ca;
                tmp *= cb;
                auto [it, inserted] = acc.try_emplace(ma.times(mb).bits(), tmp);
                if (!inserted) it->second += tmp;
            }
        MPoly p(a.vars_);
        p.terms_.reserve(acc.size());
        for (auto& [bits, c] : acc)
            if (c != 0) p.terms_.emplace_back(Monomial(bits), std::move(c));
        p.sort_terms();
        return p;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
    }

    /// Exact quotient a / b, or nullopt when b does not divide a. Uses leading-term
    /// division in graded-lex order, which succeeds exactly when b | a.
    friend std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
        a.require_same_universe(b);
        if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
        if (a.is_zero()) return MPoly(a.vars_);
        const auto& [lb, lc] = b.terms_.front();
        if (b.terms_.size() == 1) {
            MPoly q(a.vars_);
            q.terms_.reserve(a.terms_.size());
            for (const auto& [m, c] : a.terms_) {
                Coeff qc;
                if (!lb.divides(m) || !CoeffTraits<Coeff>::divide_exact(c, lc, qc)) return std::nullopt;
                q.terms_.emplace_back(lb.quotient_of(m), std::move(qc));
            }
            return q;
        }
        // Remainder as an ordered map keyed by graded-lex.
        struct Greater {
            bool operator()(std::uint64_t x, std::uint64_t y) const {
                return Monomial::graded_lex_greater(Monomial(x), Monomial(y));
            }
        };
        std::map<std::uint64_t, Coeff, Greater> rem;
        for (const auto& [m, c] : a.terms_) rem.emplace_hint(rem.end(), m.bits(), c);
        // In a monomial order lowest(a) = lowest(q) * lowest(b).
        {
            const auto& [la, lac] = a.terms_.back();
            const auto& [lowb, lowc] = b.terms_.back();
            Coeff unused;
            if (!lowb.divides(la) || !CoeffTraits<Coeff>::divide_exact(lac, lowc, unused)) return std::nullopt;
        }
        std::vector<Term> quot;
        while (!rem.empty()) {
            auto top = rem.begin();
            const Monomial m(top->first);
            Coeff qc;
            if (!lb.divides(m) || !CoeffTraits<Coeff>::divide_exact(top->second, lc, qc)) return std::nullopt;
            const Monomial qm = lb.quotient_of(m);
            for (const auto& [mb, cb] : b.terms_) {
                const std::uint64_t key = qm.times(mb).bits();
                Coeff prod = qc * cb;
                auto it = rem.find(key);
                if (it == rem.end()) {
                    rem.emplace(key, -prod);
                } else {
                    it->second -= prod;
                    if (it->second == 0) rem.erase(it);
                }
            }
            quot.emplace_back(qm, std::move(qc));
        }
        MPoly q(a.vars_);
        q.terms_ = std::move(quot);  // produced in descending order already
        return q;
    }

    /// Canonical text: descending graded-lex, explicit signs, "0" for zero.
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            Coeff mag = negative ? Coeff(-c) : c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            const std::string mono = monomial_string(m);
            if (mono.empty())
                os << CoeffTraits<Coeff>::to_string(mag);
            else if (mag == 1)
                os << mono;
            else
                os << CoeffTraits<Coeff>::to_string(mag) << '*' << mono;
        }
        return os.str();
    }

    [[nodiscard]] std::string monomial_string(Monomial m) const {
        std::string s;
        for (int i = 0; i < nvars(); ++i) {
            const int e = m.exponent(i);
            if (e == 0) continue;
            if (!s.empty()) s += '*';
            s += (*vars_)[static_cast<std::size_t>(i)];
            if (e > 1) s += '^' + std::to_string(e);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

    void require_same_universe(const MPoly& o) const {
        if (vars_ != o.vars_ && *vars_ != *o.vars_) throw std::invalid_argument("MPoly: variable universes differ");
    }

private:
    static int index_in(const std::vector<std::string>& names, const std::string& name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("MPoly: unknown variable " + name);
    }

    static void check_product_exponents(const MPoly& a, const MPoly& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.degree_in(i) + b.degree_in(i) > kMaxExponent) throw std::overflow_error("MPoly: exponent overflow in product");
    }

    static MPoly scaled_by_term(const MPoly& a, const Term& t) {
        MPoly p(a.vars_);
        p.terms_.reserve(a.terms_.size());
        for (const auto& [m, c] : a.terms_) p.terms_.emplace_back(m.times(t.first), c * t.second);
        return p;  // multiplying by a monomial preserves graded-lex order
    }

    static MPoly add(const MPoly& a, const MPoly& b, bool subtract) {
        a.require_same_universe(b);
        MPoly p(a.vars_);
        p.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && Monomial::graded_lex_greater(ia->first, ib->first))) {
                p.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || Monomial::graded_lex_greater(ib->first, ia->first)) {
                p.terms_.emplace_back(ib->first, subtract ? Coeff(-ib->second) : ib->second);
                ++ib;
            } else {
                Coeff c = subtract ? Coeff(ia->second - ib->second) : Coeff(ia->second + ib->second);
                if (c != 0) p.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return p;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return Monomial::graded_lex_greater(x.first, y.first); });
    }

    void canonicalize() {
        sort_terms();
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().first == t.first)
                merged.back().second += t.second;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.second == 0; });
        terms_ = std::move(merged);
    }

    Symbols vars_;
    std::vector<Term> terms_;
};

using IntPoly = MPoly<Integer>;
using RatPoly = MPoly<Rational>;

/// Re-expresses p over another variable universe, matching variables by name.
/// Variables missing from the target must not occur in p.
template <class C>
MPoly<C> rebase(const MPoly<C>& p, const Symbols& target) {
    std::vector<int> map(static_cast<std::size_t>(p.nvars()), -1);
    for (int i = 0; i < p.nvars(); ++i)
        for (std::size_t j = 0; j < target->size(); ++j)
            if ((*target)[j] == p.variables()[static_cast<std::size_t>(i)]) map[static_cast<std::size_t>(i)] = static_cast<int>(j);
    std::vector<typename MPoly<C>::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(target->size(), 0);
        for (int i = 0; i < p.nvars(); ++i) {
            const int x = m.exponent(i);
            if (x == 0) continue;
            if (map[static_cast<std::size_t>(i)] < 0)
                throw std::invalid_argument("rebase: variable " + p.variables()[static_cast<std::size_t>(i)] + " not in target");
            e[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = x;
        }
        terms.emplace_back(Monomial::from_exponents(e), c);
    }
    return MPoly<C>::from_terms(target, std::move(terms));
}

/// Content of an integer polynomial: gcd of its coefficients (0 for zero).
inline Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& t : p.terms()) {
        g = boost::multiprecision::gcd(g, t.second);
        if (g == 1) break;
    }
    return g;
}

}  // namespace permstat
