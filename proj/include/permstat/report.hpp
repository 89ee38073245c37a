#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"

namespace permstat {

/// Variable universes used throughout: s marks exc (or lec, iexc), t des, q maj, Y fix.
namespace vars {
inline const Symbols& s() {
    static const Symbols v = make_symbols({"s"});
    return v;
}
inline const Symbols& stq() {
    static const Symbols v = make_symbols({"s", "t", "q"});
    return v;
}
inline const Symbols& stqY() {
    static const Symbols v = make_symbols({"s", "t", "q", "Y"});
    return v;
}
}  // namespace vars

/// Outcome of a verifier: pass/fail, the first few counterexamples, and named
/// results in insertion order.
struct Report {
    static constexpr std::size_t kMaxWitnesses = 5;

    std::string target;
    bool ok = true;
    std::int64_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::pair<std::string, IntPoly>> polynomials;

    Report() = default;
    explicit Report(std::string name) : target(std::move(name)) {}

    void expect(bool condition, const std::function<std::string()>& witness) {
        ++checks;
        if (condition) return;
        ok = false;
        if (failures.size() < kMaxWitnesses) failures.push_back(witness());
    }
    void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
    void poly(std::string key, IntPoly p) { polynomials.emplace_back(std::move(key), std::move(p)); }

    void absorb(const Report& sub) {
        checks += sub.checks;
        if (!sub.ok) ok = false;
        for (const auto& f : sub.failures)
            if (failures.size() < kMaxWitnesses) failures.push_back(sub.target + ": " + f);
    }
};

}  // namespace permstat
