#pragma once

// Exhaustive generation over symmetric groups and descent classes, counting
// polynomials, and joint statistic distributions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hook.hpp"
#include "mpoly.hpp"
#include "permutation.hpp"

namespace permstat {

inline constexpr int kDefaultMaxN = 10;

class BoundExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline void check_bound(int n, int max_n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
    if (n > max_n)
        throw BoundExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
}

/// All permutations of [n] in lexicographic order, as one-line spans.
class PermutationRange {
public:
    explicit PermutationRange(int n, int max_n = kDefaultMaxN) : n_(n) { check_bound(n, max_n, "all_perms"); }

    class iterator {
    public:
        using value_type = std::span<const int>;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(int n) : w_(static_cast<std::size_t>(n)), done_(false) { std::iota(w_.begin(), w_.end(), 1); }
        std::span<const int> operator*() const { return w_; }
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

    [[nodiscard]] iterator begin() const { return iterator(n_); }
    [[nodiscard]] std::default_sentinel_t end() const { return {}; }

private:
    int n_;
};

inline PermutationRange all_perms(int n, int max_n = kDefaultMaxN) { return PermutationRange(n, max_n); }

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(std::span<const int>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

/// Backtracking over permutations of [n] with position i (1-based, i < n) forced
/// to be a descent when bit i of `descents` is set and an ascent when bit i of
/// `ascents` is set. Output is lexicographic.
template <class Fn>
void for_each_with_descent_pattern(int n, std::uint64_t descents, std::uint64_t ascents, Fn&& fn) {
    if (descents & ascents) return;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            fn(std::span<const int>(w));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (pos > 0) {
                const int prev = w[static_cast<std::size_t>(pos) - 1];
                if ((descents >> pos) & 1u) {
                    if (v > prev) break;
                } else if ((ascents >> pos) & 1u) {
                    if (v < prev) continue;
                }
            }
            w[static_cast<std::size_t>(pos)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            rec(pos + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    if (n == 0) {
        fn(std::span<const int>(w));
        return;
    }
    rec(0);
}

/// Map-reduce over S_n split by the first two letters. Chunks are folded
/// independently and merged in lexicographic chunk order, so the result does
/// not depend on the thread count.
template <class Acc, class Fold, class Merge>
Acc parallel_fold_permutations(int n, unsigned threads, const Acc& init, Fold fold, Merge merge) {
    if (n < 2) {
        Acc acc = init;
        for_each_permutation(n, [&](std::span<const int> w) { fold(acc, w); });
        return acc;
    }
    std::vector<std::pair<int, int>> prefixes;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) prefixes.emplace_back(a, b);
    std::vector<Acc> partial(prefixes.size(), init);
    auto run_chunk = [&](std::size_t idx) {
        auto [a, b] = prefixes[idx];
        std::vector<int> w{a, b};
        for (int v = 1; v <= n; ++v)
            if (v != a && v != b) w.push_back(v);
        do {
            fold(partial[idx], std::span<const int>(w));
        } while (std::next_permutation(w.begin() + 2, w.end()));
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < prefixes.size(); ++i) run_chunk(i);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < prefixes.size(); i += threads) run_chunk(i);
            });
    }
    Acc acc = init;
    for (const auto& p : partial) merge(acc, p);
    return acc;
}

// ---------------------------------------------------------------------------
// Descent classes

enum class ClassStrategy { Auto, Filter, Backtrack };
enum class IdesMode { Equal, Subset };

inline std::vector<Permutation> collect(int n, const std::function<bool(std::span<const int>)>& keep) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](std::span<const int> w) {
        if (keep(w)) out.emplace_back(std::vector<int>(w.begin(), w.end()));
    });
    return out;
}

/// Permutations of [n] with DES = J. Filtering S_n is the reference path for
/// n <= 8; larger n go through the backtracking generator.
inline std::vector<Permutation> perms_with_des(int n, const DescentSet& j, ClassStrategy strategy = ClassStrategy::Auto,
                                               int max_n = kDefaultMaxN) {
    check_bound(n, max_n, "perms_with_des");
    if (j.n() != n) throw std::invalid_argument("perms_with_des: J has the wrong ambient size");
    if (strategy == ClassStrategy::Filter || (strategy == ClassStrategy::Auto && n <= 8))
        return collect(n, [&](std::span<const int> w) { return descent_set(w) == j; });
    std::vector<Permutation> out;
    const std::uint64_t asc = DescentSet::universe_mask(n) & ~j.mask();
    for_each_with_descent_pattern(n, j.mask(), asc, [&](std::span<const int> w) {
        out.emplace_back(std::vector<int>(w.begin(), w.end()));
    });
    return out;
}

inline std::vector<Permutation> perms_with_dez(int n, const DescentSet& j, int max_n = kDefaultMaxN) {
    check_bound(n, max_n, "perms_with_dez");
    if (j.n() != n) throw std::invalid_argument("perms_with_dez: J has the wrong ambient size");
    return collect(n, [&](std::span<const int> w) { return dez(w) == j; });
}

inline std::vector<Permutation> perms_with_ides(int n, const DescentSet& j, IdesMode mode = IdesMode::Equal,
                                                int max_n = kDefaultMaxN) {
    check_bound(n, max_n, "perms_with_ides");
    if (j.n() != n) throw std::invalid_argument("perms_with_ides: J has the wrong ambient size");
    return collect(n, [&](std::span<const int> w) {
        auto d = ides(w);
        return mode == IdesMode::Equal ? d == j : d.is_subset_of(j);
    });
}

/// F_n(J): DES = J and fix = n - |J|.
inline std::vector<Permutation> F_set(int n, const DescentSet& j, int max_n = kDefaultMaxN) {
    auto all = perms_with_des(n, j, ClassStrategy::Auto, max_n);
    std::erase_if(all, [&](const Permutation& p) { return fix_count(p) != n - j.size(); });
    return all;
}

/// F'_n(J): DEZ = J and fix = n - |J|.
inline std::vector<Permutation> F_prime_set(int n, const DescentSet& j, int max_n = kDefaultMaxN) {
    auto all = perms_with_dez(n, j, max_n);
    std::erase_if(all, [&](const Permutation& p) { return fix_count(p) != n - j.size(); });
    return all;
}

/// G(J): derangements tau on the ground set J with tau(i) > tau(i+1) whenever
/// both i and i+1 lie in J.
inline std::vector<Permutation> G_set(const DescentSet& j) {
    const std::vector<int> ground = j.members();
    std::vector<Permutation> out;
    std::vector<int> values = ground;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < values.size() && ok; ++i) ok = values[i] != ground[i];
        for (std::size_t i = 0; i + 1 < ground.size() && ok; ++i)
            if (ground[i + 1] == ground[i] + 1) ok = values[i] > values[i + 1];
        if (ok) out.emplace_back(values, ground);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Statistics as generic keys

enum class Stat { fix, exc, iexc, des, maj, inv, lec, pix, DES, DEZ, IDES };

inline std::string_view to_string(Stat s) {
    switch (s) {
        case Stat::fix: return "fix";
        case Stat::exc: return "exc";
        case Stat::iexc: return "iexc";
        case Stat::des: return "des";
        case Stat::maj: return "maj";
        case Stat::inv: return "inv";
        case Stat::lec: return "lec";
        case Stat::pix: return "pix";
        case Stat::DES: return "DES";
        case Stat::DEZ: return "DEZ";
        case Stat::IDES: return "IDES";
    }
    return "?";
}

inline Stat stat_from_string(std::string_view name) {
    for (Stat s : {Stat::fix, Stat::exc, Stat::iexc, Stat::des, Stat::maj, Stat::inv, Stat::lec, Stat::pix, Stat::DES,
                   Stat::DEZ, Stat::IDES})
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

/// Integer value of a statistic; set-valued statistics map to their bitmask.
inline std::int64_t evaluate(Stat s, std::span<const int> w) {
    switch (s) {
        case Stat::fix: return fix_count(w);
        case Stat::exc: return exc_count(w);
        case Stat::iexc: return iexc(w);
        case Stat::des: return des_maj(w).des;
        case Stat::maj: return des_maj(w).maj;
        case Stat::inv: return inv_count(w);
        case Stat::lec: return lec(w);
        case Stat::pix: return pix(w);
        case Stat::DES: return static_cast<std::int64_t>(descent_set(w).mask());
        case Stat::DEZ: return static_cast<std::int64_t>(dez(w).mask());
        case Stat::IDES: return static_cast<std::int64_t>(ides(w).mask());
    }
    return 0;
}

/// Joint distribution of a statistic tuple: value tuple -> count.
class StatDistribution {
public:
    using Key = std::vector<std::int64_t>;

    void add(Key key, std::int64_t count = 1) {
        if (count <= 0) return;
        counts_[std::move(key)] += count;
    }
    void merge(const StatDistribution& o) {
        for (const auto& [k, c] : o.counts_) counts_[k] += c;
    }
    [[nodiscard]] const std::map<Key, std::int64_t>& counts() const { return counts_; }
    [[nodiscard]] std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& kv : counts_) t += kv.second;
        return t;
    }

    friend bool operator==(const StatDistribution&, const StatDistribution&) = default;

private:
    std::map<Key, std::int64_t> counts_;
};

inline StatDistribution distribution(int n, const std::vector<Stat>& stats, unsigned threads = 1,
                                     int max_n = kDefaultMaxN) {
    check_bound(n, max_n, "distribution");
    return parallel_fold_permutations(
        n, threads, StatDistribution{},
        [&](StatDistribution& acc, std::span<const int> w) {
            StatDistribution::Key key;
            key.reserve(stats.size());
            for (Stat s : stats) key.push_back(evaluate(s, w));
            acc.add(std::move(key));
        },
        [](StatDistribution& acc, const StatDistribution& part) { acc.merge(part); });
}

struct EquidistributionResult {
    bool equal = false;
    std::string diff;  // first differing key, empty when equal
    StatDistribution left, right;
};

inline EquidistributionResult equidistribution_check(int n, const std::vector<Stat>& left, const std::vector<Stat>& right,
                                                     unsigned threads = 1, int max_n = kDefaultMaxN) {
    if (left.size() != right.size()) throw std::invalid_argument("equidistribution_check: tuple arities differ");
    EquidistributionResult r;
    r.left = distribution(n, left, threads, max_n);
    r.right = distribution(n, right, threads, max_n);
    r.equal = r.left == r.right;
    if (!r.equal) {
        auto describe = [](const StatDistribution::Key& k) {
            std::ostringstream os;
            os << '(';
            for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
            os << ')';
            return os.str();
        };
        const auto& a = r.left.counts();
        const auto& b = r.right.counts();
        for (const auto& [k, c] : a) {
            auto it = b.find(k);
            const std::int64_t other = it == b.end() ? 0 : it->second;
            if (other != c) {
                r.diff = describe(k) + ": " + std::to_string(c) + " vs " + std::to_string(other);
                break;
            }
        }
        if (r.diff.empty())
            for (const auto& [k, c] : b)
                if (!a.contains(k)) {
                    r.diff = describe(k) + ": 0 vs " + std::to_string(c);
                    break;
                }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Counting polynomials

/// Accumulates sum of prod var_i^{stat_i(sigma)} with machine-integer counts.
class GenPolyBuilder {
public:
    GenPolyBuilder(Symbols vars, std::vector<std::pair<Stat, std::string>> bindings)
        : vars_(std::move(vars)), bindings_(std::move(bindings)) {
        IntPoly probe(vars_);
        for (const auto& b : bindings_) indices_.push_back(probe.var_index(b.second));
    }

    void add(std::span<const int> w) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < bindings_.size(); ++i) {
            const auto v = evaluate(bindings_[i].first, w);
            bits += Monomial::variable(indices_[i], static_cast<int>(v)).bits();
        }
        ++counts_[bits];
    }
    void add_monomial(Monomial m, std::int64_t count = 1) { counts_[m.bits()] += count; }
    void merge(const GenPolyBuilder& o) {
        for (const auto& [k, c] : o.counts_) counts_[k] += c;
    }

    [[nodiscard]] IntPoly to_poly() const {
        std::vector<IntPoly::Term> terms;
        terms.reserve(counts_.size());
        for (const auto& [bits, c] : counts_) terms.emplace_back(Monomial(bits), Integer(c));
        return IntPoly::from_terms(vars_, std::move(terms));
    }

private:
    Symbols vars_;
    std::vector<std::pair<Stat, std::string>> bindings_;
    std::vector<int> indices_;
    std::map<std::uint64_t, std::int64_t> counts_;
};

/// Counting polynomial of a finite set of permutations (ground set [n]).
template <class Range>
IntPoly gen_poly(const Range& set, const Symbols& vars, const std::vector<std::pair<Stat, std::string>>& bindings) {
    GenPolyBuilder b(vars, bindings);
    for (const auto& p : set) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Permutation>)
            b.add(p.values());
        else
            b.add(p);
    }
    return b.to_poly();
}

/// sum over the set of s^{exc}, for permutations on arbitrary ground sets.
inline IntPoly exc_poly(const std::vector<Permutation>& set, const Symbols& vars, const std::string& var = "s") {
    GenPolyBuilder b(vars, {});
    IntPoly probe(vars);
    const int idx = probe.var_index(var);
    for (const auto& p : set) b.add_monomial(Monomial::variable(idx, exc_count(p)));
    return b.to_poly();
}

/// DES of alternating (pi_1 > pi_2 < pi_3 ...) and reverse alternating permutations.
inline std::uint64_t alternating_mask(int n) {
    std::uint64_t m = 0;
    for (int i = 1; i < n; i += 2) m |= std::uint64_t{1} << i;
    return m;
}
inline std::uint64_t reverse_alternating_mask(int n) {
    std::uint64_t m = 0;
    for (int i = 2; i < n; i += 2) m |= std::uint64_t{1} << i;
    return m;
}

template <class Fn>
void for_each_alternating(int n, bool reverse, Fn&& fn) {
    const std::uint64_t d = reverse ? reverse_alternating_mask(n) : alternating_mask(n);
    for_each_with_descent_pattern(n, d, DescentSet::universe_mask(n) & ~d, std::forward<Fn>(fn));
}

}  // namespace permstat
