#pragma once

// Text forms of permutations, words, sets and compositions.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace permstat {

/// One-line notation; letters are juxtaposed when all are single digits
/// ("74315628") and comma-separated otherwise.
inline std::string one_line(std::span<const int> w) {
    const bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}
inline std::string one_line(const Permutation& p) { return one_line(p.values()); }
inline std::string one_line(const Word& w) { return one_line(w.letters()); }

inline std::string set_string(const std::vector<int>& members) {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + std::to_string(members[i]);
    return s + "}";
}
inline std::string set_string(const DescentSet& j) { return set_string(j.members()); }

inline std::string composition_string(const Composition& m) {
    std::string s = "(";
    for (int i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[static_cast<std::size_t>(i)]);
    return s + ")";
}

}  // namespace permstat
