#pragma once

// Desarrangements, hook factorization, lec/pix, rotation classes and
// standardization of words.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace permstat {

/// True when the leftmost trough of w sits at an even position, with the
/// convention w_{n+1} = +infinity.
inline bool is_desarrangement(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("is_desarrangement: empty word");
    std::size_t k = 1;  // 1-based trough position
    while (k < w.size() && w[k - 1] > w[k]) ++k;
    return k % 2 == 0;
}
inline bool is_desarrangement(const Word& w) { return is_desarrangement(w.letters()); }

/// w = u h_1 ... h_k with u weakly increasing and every h_i a hook.
struct HookFactorization {
    std::vector<int> prefix;
    std::vector<std::vector<int>> hooks;

    [[nodiscard]] std::vector<int> concatenate() const {
        std::vector<int> w = prefix;
        for (const auto& h : hooks) w.insert(w.end(), h.begin(), h.end());
        return w;
    }

    friend bool operator==(const HookFactorization&, const HookFactorization&) = default;
};

inline bool is_hook(std::span<const int> h) {
    if (h.size() < 2 || h[0] <= h[1]) return false;
    for (std::size_t i = 2; i < h.size(); ++i)
        if (h[i - 1] > h[i]) return false;
    return true;
}

inline HookFactorization hook_factorize(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("hook_factorize: empty word");
    HookFactorization f;
    std::size_t end = w.size();
    while (end > 0) {
        std::size_t start = end - 1;
        while (start > 0 && w[start - 1] <= w[start]) --start;
        if (start == 0) {
            f.prefix.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(end));
            break;
        }
        // w[start-1] > w[start] by maximality of the increasing run
        f.hooks.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start - 1),
                             w.begin() + static_cast<std::ptrdiff_t>(end));
        end = start - 1;
    }
    std::reverse(f.hooks.begin(), f.hooks.end());
    return f;
}
inline HookFactorization hook_factorize(const Word& w) { return hook_factorize(w.letters()); }

inline int lec(const HookFactorization& f) {
    int total = 0;
    for (const auto& h : f.hooks) total += inv_count(h);
    return total;
}
inline int lec(std::span<const int> w) { return lec(hook_factorize(w)); }
inline int lec(const Word& w) { return lec(w.letters()); }

/// Length of the weakly increasing prefix; these letters are the pixed points.
inline int pix(std::span<const int> w) { return static_cast<int>(hook_factorize(w).prefix.size()); }
inline int pix(const Word& w) { return pix(w.letters()); }

inline std::vector<int> left_rotate(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("left_rotate: empty word");
    std::vector<int> r(w.begin(), w.end());
    std::rotate(r.begin(), r.begin() + 1, r.end());
    return r;
}
inline std::vector<int> right_rotate(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("right_rotate: empty word");
    std::vector<int> r(w.begin(), w.end());
    std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());
    return r;
}
inline Word left_rotate(const Word& w) { return Word(left_rotate(w.letters())); }
inline Word right_rotate(const Word& w) { return Word(right_rotate(w.letters())); }

enum class RotationClass { A0, B0, A1, B1, None };

inline std::string_view to_string(RotationClass c) {
    switch (c) {
        case RotationClass::A0: return "A0";
        case RotationClass::B0: return "B0";
        case RotationClass::A1: return "A1";
        case RotationClass::B1: return "B1";
        case RotationClass::None: break;
    }
    return "None";
}
inline std::ostream& operator<<(std::ostream& os, RotationClass c) { return os << to_string(c); }

namespace detail {

// Only a permutation can have IDES = [n-1] (the decreasing one); a repeated
// letter shrinks the ambient size.
inline bool ides_is_full_interval(std::span<const int> w) {
    auto d = ides(w);
    return d.n() == static_cast<int>(w.size()) && d.is_full();
}

inline RotationClass classify_desarrangement(std::span<const int> w, bool strict) {
    if (strict && ides_is_full_interval(w)) return RotationClass::None;
    const int before = lec(w);
    const int after = lec(right_rotate(w));
    if (after == before) return RotationClass::A0;
    if (after == before - 1) return RotationClass::B0;
    return RotationClass::None;
}

inline RotationClass classify_impl(std::span<const int> w, bool strict) {
    if (w.empty()) return RotationClass::None;
    auto f = hook_factorize(w);
    if (f.prefix.empty()) return classify_desarrangement(w, strict);
    if (f.prefix.size() == 1) {
        auto rotated = left_rotate(w);
        if (!hook_factorize(rotated).prefix.empty()) return RotationClass::None;
        switch (classify_desarrangement(rotated, strict)) {
            case RotationClass::A0: return RotationClass::A1;
            case RotationClass::B0: return RotationClass::B1;
            default: return RotationClass::None;
        }
    }
    return RotationClass::None;
}

}  // namespace detail

/// Rotation class from the lec difference alone. The decreasing permutation of
/// even length gets a tag here although the drop dichotomy does not cover it.
inline RotationClass classify(std::span<const int> w) { return detail::classify_impl(w, false); }
inline RotationClass classify(const Word& w) { return classify(w.letters()); }

/// As classify, but returns None whenever the desarrangement involved has
/// IDES = [n-1]. The A/B identities are stated for these classes.
inline RotationClass classify_strict(std::span<const int> w) { return detail::classify_impl(w, true); }
inline RotationClass classify_strict(const Word& w) { return classify_strict(w.letters()); }

/// Multiplicity vector of a word on {1, ..., r}; throws when a letter is missing.
inline Composition letter_content(std::span<const int> w) {
    int r = 0;
    for (int x : w) {
        if (x < 1) throw std::invalid_argument("letter_content: letters must be positive");
        r = std::max(r, x);
    }
    std::vector<int> counts(static_cast<std::size_t>(r), 0);
    for (int x : w) ++counts[static_cast<std::size_t>(x - 1)];
    for (int c : counts)
        if (c == 0) throw std::invalid_argument("letter_content: letter support has a gap");
    return Composition(std::move(counts));
}

/// Labels the 1s of w left to right by 1..m_1, the 2s by m_1+1..m_1+m_2, etc.
inline Permutation standardize(std::span<const int> w, const Composition& m) {
    if (letter_content(w) != m) throw std::invalid_argument("standardize: letter support does not match composition");
    std::vector<int> next(static_cast<std::size_t>(m.size()));
    int acc = 0;
    for (int i = 0; i < m.size(); ++i) {
        next[static_cast<std::size_t>(i)] = acc + 1;
        acc += m[static_cast<std::size_t>(i)];
    }
    std::vector<int> sigma(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) sigma[i] = next[static_cast<std::size_t>(w[i] - 1)]++;
    return Permutation(std::move(sigma));
}
inline Permutation standardize(const Word& w, const Composition& m) { return standardize(w.letters(), m); }
inline Permutation standardize(std::span<const int> w) { return standardize(w, letter_content(w)); }

/// Inverse of standardize for a fixed composition.
inline Word destandardize(const Permutation& sigma, const Composition& m) {
    if (m.total() != sigma.size()) throw std::invalid_argument("destandardize: composition total differs from length");
    auto bounds = m.partial_sums();
    std::vector<int> w(static_cast<std::size_t>(sigma.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto it = std::lower_bound(bounds.begin(), bounds.end(), sigma[i]);
        w[i] = static_cast<int>(it - bounds.begin()) + 1;
    }
    return Word(std::move(w));
}

inline constexpr int kDefaultRearrangementBound = 10;

/// Every rearrangement of 1^{m_1} ... r^{m_r}, in lexicographic order.
class RearrangementClass {
public:
    explicit RearrangementClass(const Composition& m, int bound = kDefaultRearrangementBound) {
        if (m.total() > bound) throw std::out_of_range("rearrangement_class: total exceeds bound");
        for (int i = 0; i < m.size(); ++i) first_.insert(first_.end(), static_cast<std::size_t>(m[static_cast<std::size_t>(i)]), i + 1);
    }

    class iterator {
    public:
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(std::vector<int> w) : w_(std::move(w)), done_(false) {}
        const std::vector<int>& operator*() const { return w_; }
        iterator& operator++() {
            done_ = !std::next_permutation(w_.begin(), w_.end());
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        std::vector<int> w_;
        bool done_ = true;
    };

    [[nodiscard]] iterator begin() const { return iterator(first_); }
    [[nodiscard]] std::default_sentinel_t end() const { return {}; }

private:
    std::vector<int> first_;
};

inline RearrangementClass rearrangement_class(const Composition& m, int bound = kDefaultRearrangementBound) {
    return RearrangementClass(m, bound);
}

}  // namespace permstat
