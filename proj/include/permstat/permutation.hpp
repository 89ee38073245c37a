#pragma once

// Permutations, words, descent sets and the elementary statistics on them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permstat {

/// Subset of {1, ..., n-1} stored as a bitmask (bit i <=> i is a member).
class DescentSet {
public:
    static constexpr int kMaxN = 64;

    DescentSet() = default;
    explicit DescentSet(int n, std::uint64_t mask = 0) : n_(n), mask_(mask) {
        if (n < 0 || n > kMaxN) throw std::out_of_range("DescentSet: ambient size out of range");
        if (mask & ~universe_mask(n)) throw std::invalid_argument("DescentSet: member outside [n-1]");
    }
    DescentSet(int n, std::initializer_list<int> members) : DescentSet(n, std::vector<int>(members)) {}
    DescentSet(int n, const std::vector<int>& members) : DescentSet(n) {
        for (int i : members) insert(i);
    }

    /// Full set [n-1].
    static DescentSet full(int n) { return DescentSet(n, universe_mask(n)); }

    static std::uint64_t universe_mask(int n) {
        if (n <= 1) return 0;
        // bits 1..n-1
        return (n - 1 >= 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)) & ~std::uint64_t{1};
    }

    void insert(int i) {
        if (i < 1 || i > n_ - 1) throw std::invalid_argument("DescentSet: member " + std::to_string(i) + " outside [n-1]");
        mask_ |= std::uint64_t{1} << i;
    }

    [[nodiscard]] bool contains(int i) const {
        return i >= 1 && i < kMaxN && ((mask_ >> i) & 1u) != 0;
    }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::uint64_t mask() const { return mask_; }
    [[nodiscard]] int size() const { return std::popcount(mask_); }
    [[nodiscard]] bool empty() const { return mask_ == 0; }
    [[nodiscard]] bool is_full() const { return mask_ == universe_mask(n_); }
    [[nodiscard]] bool is_proper() const { return !is_full(); }
    [[nodiscard]] bool is_subset_of(const DescentSet& other) const { return (mask_ & ~other.mask_) == 0; }

    [[nodiscard]] int sum() const {
        int s = 0;
        for (int i : members()) s += i;
        return s;
    }

    [[nodiscard]] std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    friend bool operator==(const DescentSet&, const DescentSet&) = default;
    friend auto operator<=>(const DescentSet& a, const DescentSet& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.mask_ <=> b.mask_;
    }

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// Sequence of positive parts (m_1, ..., m_r).
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
    }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int size() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Partial sums s_1, ..., s_r.
    [[nodiscard]] std::vector<int> partial_sums() const {
        std::vector<int> s(parts_.size());
        std::partial_sum(parts_.begin(), parts_.end(), s.begin());
        return s;
    }

    /// J(m) = {s_1, ..., s_{r-1}} as a subset of [total-1].
    [[nodiscard]] DescentSet to_descent_set() const {
        DescentSet j(total());
        auto s = partial_sums();
        for (std::size_t i = 0; i + 1 < s.size(); ++i) j.insert(s[i]);
        return j;
    }

    /// Inverse of to_descent_set: the composition of n whose partial sums are J together with n.
    static Composition from_descent_set(const DescentSet& j) {
        if (j.n() < 1) throw std::invalid_argument("Composition: ambient size must be positive");
        std::vector<int> parts;
        int prev = 0;
        for (int i : j.members()) {
            parts.push_back(i - prev);
            prev = i;
        }
        parts.push_back(j.n() - prev);
        return Composition(std::move(parts));
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Finite sequence of positive integers.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
        for (int x : letters_)
            if (x < 1) throw std::invalid_argument("Word: letters must be positive");
    }

    [[nodiscard]] std::span<const int> letters() const { return letters_; }
    [[nodiscard]] const std::vector<int>& vec() const { return letters_; }
    [[nodiscard]] int size() const { return static_cast<int>(letters_.size()); }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// Permutation in one-line notation on a ground set j_1 < ... < j_r.
/// values()[i] is sigma(j_{i+1}); the default ground set is [n].
class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        ground_.resize(values_.size());
        std::iota(ground_.begin(), ground_.end(), 1);
        validate();
    }
    Permutation(std::vector<int> values, std::vector<int> ground)
        : values_(std::move(values)), ground_(std::move(ground)) {
        if (values_.size() != ground_.size()) throw std::invalid_argument("Permutation: ground set size mismatch");
        for (std::size_t i = 1; i < ground_.size(); ++i)
            if (ground_[i - 1] >= ground_[i]) throw std::invalid_argument("Permutation: ground set must be strictly increasing");
        validate();
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    [[nodiscard]] std::span<const int> values() const { return values_; }
    [[nodiscard]] const std::vector<int>& vec() const { return values_; }
    [[nodiscard]] const std::vector<int>& ground_set() const { return ground_; }
    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] bool on_standard_ground_set() const {
        for (std::size_t i = 0; i < ground_.size(); ++i)
            if (ground_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }
    int operator[](std::size_t i) const { return values_[i]; }

    /// Inverse permutation on the same ground set.
    [[nodiscard]] Permutation inverse() const {
        std::vector<int> inv(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) inv[index_of(values_[i])] = ground_[i];
        return Permutation(std::move(inv), ground_);
    }

    [[nodiscard]] Word as_word() const { return Word(values_); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    [[nodiscard]] std::size_t index_of(int element) const {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), element);
        return static_cast<std::size_t>(it - ground_.begin());
    }

    void validate() const {
        std::vector<int> sorted = values_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != ground_) throw std::invalid_argument("Permutation: values are not a bijection of the ground set");
    }

    std::vector<int> values_;
    std::vector<int> ground_;
};

// ---------------------------------------------------------------------------
// Statistics on one-line sequences. The span overloads assume ground set [n].

inline DescentSet descent_set(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::uint64_t mask = 0;
    for (int i = 1; i < n; ++i)
        if (w[i - 1] > w[i]) mask |= std::uint64_t{1} << i;
    return DescentSet(n, mask);
}
inline DescentSet descent_set(const Permutation& p) { return descent_set(p.values()); }

inline int fix_count(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += (w[i] == static_cast<int>(i) + 1);
    return c;
}
inline int fix_count(const Permutation& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.vec().size(); ++i) c += (p[i] == p.ground_set()[i]);
    return c;
}

inline int exc_count(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += (w[i] > static_cast<int>(i) + 1);
    return c;
}
inline int exc_count(const Permutation& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.vec().size(); ++i) c += (p[i] > p.ground_set()[i]);
    return c;
}

inline int subcedance_count(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += (w[i] < static_cast<int>(i) + 1);
    return c;
}

/// Inverse of a permutation of [n] given in one-line notation.
inline std::vector<int> inverse_of(std::span<const int> w) {
    std::vector<int> inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

/// exc of the inverse. Counts i with sigma(i) < i, which is the same number.
inline int iexc(std::span<const int> w) { return subcedance_count(w); }
inline int iexc(const Permutation& p) {
    if (!p.on_standard_ground_set()) throw std::invalid_argument("iexc: ground set must be [n]");
    return iexc(p.values());
}

/// Descent set of the word obtained by replacing every fixed point with 0.
inline DescentSet dez(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::uint64_t mask = 0;
    auto zeroed = [&](int i) { return w[i] == i + 1 ? 0 : w[i]; };
    for (int i = 1; i < n; ++i)
        if (zeroed(i - 1) > zeroed(i)) mask |= std::uint64_t{1} << i;
    return DescentSet(n, mask);
}
inline DescentSet dez(const Permutation& p) {
    if (!p.on_standard_ground_set()) throw std::invalid_argument("dez: ground set must be [n]");
    return dez(p.values());
}

/// IDES of a word whose letters are exactly {1, ..., m}: i is a member when the
/// rightmost i lies to the right of the rightmost i+1. Ambient size is m.
inline DescentSet ides(std::span<const int> w) {
    int m = 0;
    for (int x : w) {
        if (x < 1) throw std::invalid_argument("ides: letters must be positive");
        m = std::max(m, x);
    }
    std::vector<int> last(static_cast<std::size_t>(m) + 1, -1);
    for (std::size_t i = 0; i < w.size(); ++i) last[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
    for (int v = 1; v <= m; ++v)
        if (last[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("ides: letter " + std::to_string(v) + " missing from word support");
    DescentSet out(m);
    for (int i = 1; i < m; ++i)
        if (last[static_cast<std::size_t>(i)] > last[static_cast<std::size_t>(i) + 1]) out.insert(i);
    return out;
}
inline DescentSet ides(const Word& w) { return ides(w.letters()); }
inline DescentSet ides(const Permutation& p) {
    if (!p.on_standard_ground_set()) throw std::invalid_argument("ides: ground set must be [n]");
    return ides(p.values());
}

struct DesMaj {
    int des = 0;
    int maj = 0;
    friend bool operator==(const DesMaj&, const DesMaj&) = default;
};

inline DesMaj des_maj(std::span<const int> w) {
    DesMaj r;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) {
            ++r.des;
            r.maj += static_cast<int>(i);
        }
    return r;
}
inline DesMaj des_maj(const Permutation& p) { return des_maj(p.values()); }

inline int inv_count(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += (w[i] > w[j]);
    return c;
}
inline int inv_count(const Word& w) { return inv_count(w.letters()); }

/// Sizes of the maximal runs of consecutive integers in J, left to right.
inline Composition block_decomposition(const DescentSet& j) {
    if (j.empty()) throw std::invalid_argument("block_decomposition: J must be nonempty");
    std::vector<int> blocks;
    int prev = -2;
    for (int i : j.members()) {
        if (i == prev + 1)
            ++blocks.back();
        else
            blocks.push_back(1);
        prev = i;
    }
    return Composition(std::move(blocks));
}

}  // namespace permstat
