// One line per acceptance criterion. Exit status is nonzero when any line fails.
// `acceptance --slow` runs only the n = 7 generating-polynomial extraction.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "permstat/permstat.hpp"
#include "../support/properties.hpp"

using namespace permstat;

namespace {

const unsigned kThreads = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));

struct Outcome {
    Report report;
    double budget_seconds;
};

std::set<std::string> as_strings(const std::vector<Permutation>& v) {
    std::set<std::string> out;
    for (const auto& p : v) out.insert(one_line(p));
    return out;
}

IntPoly var(const Symbols& v, const char* name, int e = 1) { return IntPoly::variable(v, name, e); }

Outcome thm1_example() {
    Report rep("thm1 example");
    const auto r = verify_thm1(8, DescentSet(8, {1, 2, 3, 6}));
    const IntPoly two_s2 = var(vars::s(), "s", 2) * Integer(2);
    rep.expect(as_strings(r.F) == std::set<std::string>{"74315628", "74325618"}, [] { return "F_8({1,2,3,6}) differs"; });
    rep.expect(as_strings(r.G) == std::set<std::string>{"6321", "6312"}, [] { return "G({1,2,3,6}) differs"; });
    rep.expect(r.F_poly == two_s2 && r.G_poly == two_s2, [&] { return "polynomials " + r.F_poly.to_string() + ", " + r.G_poly.to_string(); });
    rep.absorb(r.report);
    return {rep, 1.0};
}

Outcome thm1_exhaustive() {
    Report rep("thm1 exhaustive");
    for (int n = 1; n <= 8; ++n) rep.absorb(verify_thm1_all(n, kThreads));
    const auto r = verify_thm1(8, DescentSet(8, {1, 2, 3, 6}));
    rep.expect(as_strings(r.F_prime) == std::set<std::string>{"63245178", "63145278"}, [] { return "F'_8({1,2,3,6}) differs"; });
    return {rep, 120.0};
}

Outcome thm2() {
    Report rep("thm2");
    const Symbols& v = vars::s();
    const auto r = verify_thm2(6, DescentSet(6, {1, 3, 4, 5}));
    rep.expect(r.zero == var(v, "s", 4) + var(v, "s", 3) * Integer(5), [&] { return "D0 poly " + r.zero.to_string(); });
    rep.expect(r.one == var(v, "s", 3) * Integer(4) + var(v, "s", 2) * Integer(2), [&] { return "D1 poly " + r.one.to_string(); });
    rep.expect(r.quotient == var(v, "s", 3) + var(v, "s", 2) * Integer(2), [&] { return "quotient " + r.quotient.to_string(); });
    for (int n = 1; n <= 8; ++n) {
        rep.absorb(verify_thm2_all(n, ExcVariant::exc, kThreads));
        rep.absorb(verify_thm2_all(n, ExcVariant::iexc, kThreads));
    }
    return {rep, 180.0};
}

Outcome thm2_chain() {
    Report rep("thm2 chain");
    for (int n = 1; n <= 7; ++n) rep.absorb(verify_thm2_chain(n, kThreads));
    rep.absorb(verify_rearrangement_classes_all(7));
    return {rep, 120.0};
}

Outcome hooks() {
    Report rep("hook machinery");
    const Word w({1, 2, 4, 5, 6, 4, 5, 6, 4, 1, 3, 6, 5, 5, 4, 6, 1, 1, 4, 5, 1, 1});
    const auto f = hook_factorize(w);
    const std::vector<std::vector<int>> expected{{6, 4, 5, 6}, {4, 1, 3}, {6, 5}, {5, 4}, {6, 1, 1, 4}, {5, 1, 1}};
    rep.expect(f.prefix == std::vector<int>{1, 2, 4, 5} && f.hooks == expected, [] { return "factorization differs"; });
    rep.expect(pix(w) == 4 && lec(w) == 11, [&] { return "pix " + std::to_string(pix(w)) + ", lec " + std::to_string(lec(w)); });
    for (int n = 1; n <= 8; ++n) rep.absorb(verify_lec_drop(n, kThreads));
    return {rep, 120.0};
}

Outcome alternating() {
    Report rep("alternating");
    for (int n = 2; n <= 4; ++n) rep.absorb(verify_cor3(n));
    for (int n = 2; n <= 8; ++n) rep.absorb(verify_cor4(n));
    for (int n = 1; n <= 5; ++n) rep.absorb(verify_prop7(n));
    const Permutation pi({3, 2, 6, 4, 5, 1, 10, 8, 9, 7});
    const Permutation tau = prop7_map(pi);
    rep.expect(one_line(tau) == "23154", [&] { return "image " + one_line(tau); });
    rep.expect(exc_count(pi) == 3 && exc_count(tau) == 3, [] { return "exc not 3 on the worked pair"; });
    return {rep, 120.0};
}

Outcome equidistribution() {
    Report rep("equidistribution");
    for (int n = 1; n <= 7; ++n) {
        rep.absorb(verify_prop8(n, kThreads));
        rep.absorb(verify_prop13(n, kThreads));
        rep.absorb(verify_dw(n, kThreads));
    }
    return {rep, 60.0};
}

Outcome max_fixed_points() {
    Report rep("max fixed points");
    rep.absorb(verify_thm5(8));
    rep.expect(as_strings(M_brute_witnesses(Composition{3, 1})) == std::set<std::string>{"4312", "4321"}, [] { return "M(3,1) witnesses"; });
    rep.expect(as_strings(M_brute_witnesses(Composition{1, 3})) == std::set<std::string>{"3421", "4321"}, [] { return "M(1,3) witnesses"; });
    rep.expect(M_series(Composition{3, 1}) == 2 && M_series(Composition{1, 3}) == 2, [] { return "M(3,1) or M(1,3) is not 2"; });
    return {rep, 120.0};
}

Outcome four_variable(int lo, int hi) {
    Report rep("four-variable polynomial");
    for (int n = lo; n <= hi; ++n) {
        const IntPoly a = A_n_extract(n), b = A_n_brute(n, kThreads);
        rep.expect(a == b, [&] { return "n=" + std::to_string(n) + ": extracted " + a.to_string() + " vs " + b.to_string(); });
    }
    if (lo <= 2 && hi >= 2) {
        const Symbols& v = vars::stqY();
        const IntPoly a2 = var(v, "Y", 2) + var(v, "s") * var(v, "t") * var(v, "q");
        rep.expect(A_n_extract(2) == a2, [] { return "A_2 differs from Y^2 + stq"; });
    }
    return {rep, 300.0};
}

Outcome thm13() {
    Report rep("thm13");
    const Symbols& v = vars::stq();
    const IntPoly s = var(v, "s"), t = var(v, "t"), q = var(v, "q");
    for (int n = 1; n <= 8; ++n) rep.absorb(verify_thm13(n, kThreads).report);
    rep.expect(verify_thm13(3).quotient == s * t * q * q, [] { return "Q_3 is not stq^2"; });
    const std::vector<IntPoly> expected_r{IntPoly::constant(v, -1), s * t * q, -(s * t * t * q * q * q)};
    for (int n = 1; n <= 3; ++n) {
        const auto split = fixed_point_split(n);
        const IntPoly diff = split.zero - split.one;
        const IntPoly& r = expected_r[static_cast<std::size_t>(n - 1)];
        rep.expect(r_small(n) == r, [&] { return "r_" + std::to_string(n) + " = " + r_small(n).to_string(); });
        const auto quotient = exact_div(diff - r, s_minus_one(v));
        rep.expect(quotient.has_value() && (n < 3 || *quotient == s * t * q * q),
                   [&] { return "n=" + std::to_string(n) + ": difference " + diff.to_string() + " minus r_n is not (s-1)Q"; });
    }
    return {rep, 120.0};
}

Outcome cor15() {
    Report rep("cor15");
    const Symbols& v = vars::s();
    const IntPoly s = var(v, "s");
    auto c = [&](int k) { return IntPoly::constant(v, k); };
    const auto qs = H_expand(12);
    const std::vector<IntPoly> shown{c(1), s + c(3), s * s + s * Integer(17) + c(4), s * s * s + s * s * Integer(46) + s * Integer(80) + c(5)};
    for (int n = 3; n <= 6; ++n)
        rep.expect(qs[static_cast<std::size_t>(n)] == shown[static_cast<std::size_t>(n - 3)],
                   [&] { return "Q_" + std::to_string(n) + " = " + qs[static_cast<std::size_t>(n)].to_string(); });
    rep.absorb(verify_cor15(12, 9, kThreads));
    return {rep, 120.0};
}

Outcome thm16() {
    Report rep("thm16");
    std::map<std::uint64_t, Thm16Counts> counts;
    for (int n = 1; n <= 7; ++n) rep.absorb(verify_thm16(n, kThreads, n == 6 ? &counts : nullptr));
    const auto& c = counts.at(DescentSet(6, {1, 3, 4, 5}).mask());
    rep.expect(c.des_derangements == 6 && c.des_one_fixed == 6, [&] {
        return "n=6 J={1,3,4,5}: " + std::to_string(c.des_derangements) + " vs " + std::to_string(c.des_one_fixed);
    });
    return {rep, 120.0};
}

Outcome engine_properties() {
    Report rep("engine properties");
    rep.absorb(props::reciprocal_round_trip(1200));
    rep.absorb(props::q_pochhammer_recurrence(1200));
    rep.absorb(props::exact_division(1200));
    rep.absorb(props::thread_determinism(1000));
    return {rep, 60.0};
}

bool run_line(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
        o = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < o.budget_seconds;
    const bool ok = error.empty() && o.report.ok && in_time;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << title << "  [" << o.report.checks
              << " checks, " << std::fixed << std::setprecision(2) << secs << " s]";
    if (!error.empty()) std::cout << "  error: " << error;
    if (!o.report.failures.empty()) std::cout << "  first failure: " << o.report.failures.front();
    if (error.empty() && !in_time) std::cout << "  over budget of " << o.budget_seconds << " s";
    std::cout << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::string(argv[1]) == "--slow") {
        const bool ok = run_line(9, "four-variable polynomial extraction at n = 7 (slow)", [] { return four_variable(7, 7); });
        return ok ? 0 : 1;
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> lines{
        {"descent-class example: F_8({1,2,3,6}), G({1,2,3,6}), both 2s^2", thm1_example},
        {"descent-class fixed points, all J, n <= 8, with the DEZ variant", thm1_exhaustive},
        {"(s-1) divides D0 - D1 with nonnegative quotient, exc and iexc, n <= 8", thm2},
        {"rotation class sums balance over DES = J, IDES inside J and rearrangement classes", thm2_chain},
        {"hook factorization example and lec drop dichotomy, n <= 8", hooks},
        {"alternating permutations: fixed point counts and the standardization bijection", alternating},
        {"joint equidistributions, n <= 7", equidistribution},
        {"maximal fixed point counts M(a): series, brute force, parity, symmetry", max_fixed_points},
        {"four-variable generating polynomial extraction, n <= 6", [] { return four_variable(0, 6); }},
        {"fixed point quotient Q_n(s,t,q) and remainders r_n", thm13},
        {"Q_n(s) from the exponential series, counts and type B", cor15},
        {"counting forms of the descent-class identity, n <= 7", thm16},
        {"engine property suites", engine_properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (!run_line(static_cast<int>(i) + 1, lines[i].first, lines[i].second)) ++failed;
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
    return failed == 0 ? 0 : 1;
}
