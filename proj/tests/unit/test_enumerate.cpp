#include "catch_amalgamated.hpp"

#include <set>

#include "permstat/permstat.hpp"

using namespace permstat;

namespace {

std::set<std::string> strings(const std::vector<Permutation>& v) {
    std::set<std::string> out;
    for (const auto& p : v) out.insert(one_line(p));
    return out;
}

std::int64_t count_all(int n) {
    std::int64_t c = 0;
    for (const auto w : all_perms(n)) {
        (void)w;
        ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("all_perms visits n! permutations") {
    for (int n = 0; n <= 7; ++n) CHECK(Integer(count_all(n)) == factorial(n));
    CHECK_THROWS_AS(all_perms(11), BoundExceeded);
    CHECK_THROWS_AS(all_perms(9, 8), std::out_of_range);
}

TEST_CASE("descent classes agree across strategies") {
    for (int n = 1; n <= 7; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 2) {
            const DescentSet j(n, mask);
            const auto a = perms_with_des(n, j, ClassStrategy::Filter);
            const auto b = perms_with_des(n, j, ClassStrategy::Backtrack);
            REQUIRE(a == b);
            for (const auto& p : a) CHECK(descent_set(p) == j);
        }
    }
}

TEST_CASE("descent class sizes sum to n!") {
    const int n = 6;
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 2) total += static_cast<std::int64_t>(perms_with_des(n, DescentSet(n, mask)).size());
    CHECK(total == 720);
}

TEST_CASE("descent-class worked example") {
    const DescentSet j(8, {1, 2, 3, 6});
    std::set<std::string> max_fix;
    for (const auto& p : perms_with_des(8, j))
        if (fix_count(p) == 4) max_fix.insert(one_line(p));
    CHECK(max_fix == std::set<std::string>{"74315628", "74325618"});
    CHECK(strings(F_set(8, j)) == std::set<std::string>{"74315628", "74325618"});
    CHECK(strings(G_set(j)) == std::set<std::string>{"6321", "6312"});
    CHECK(strings(F_prime_set(8, j)) == std::set<std::string>{"63245178", "63145278"});
    for (const auto& g : G_set(j)) CHECK(g.ground_set() == std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("DEZ and IDES classes") {
    for (const auto& p : perms_with_dez(5, DescentSet(5, {1, 3}))) CHECK(dez(p) == DescentSet(5, {1, 3}));
    const DescentSet j(5, {2, 4});
    for (const auto& p : perms_with_ides(5, j, IdesMode::Equal)) CHECK(ides(p) == j);
    for (const auto& p : perms_with_ides(5, j, IdesMode::Subset)) CHECK(ides(p).is_subset_of(j));
    CHECK(perms_with_ides(5, j, IdesMode::Equal).size() == perms_with_des(5, j).size());
}

TEST_CASE("statistic names round trip") {
    for (Stat s : {Stat::fix, Stat::exc, Stat::iexc, Stat::des, Stat::maj, Stat::inv, Stat::lec, Stat::pix, Stat::DES, Stat::DEZ, Stat::IDES})
        CHECK(stat_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(stat_from_string("nonsense"), std::invalid_argument);
}

TEST_CASE("equidistribution checks") {
    CHECK(equidistribution_check(5, {Stat::exc}, {Stat::exc}).equal);
    const auto r = equidistribution_check(3, {Stat::fix}, {Stat::exc});
    CHECK_FALSE(r.equal);
    CHECK_FALSE(r.diff.empty());
    CHECK(equidistribution_check(5, {Stat::des}, {Stat::exc}).equal);
    CHECK(equidistribution_check(5, {Stat::maj}, {Stat::inv}).equal);
    CHECK_THROWS_AS(equidistribution_check(3, {Stat::fix}, {Stat::exc, Stat::des}), std::invalid_argument);
}

TEST_CASE("distributions do not depend on thread count") {
    for (unsigned t : {1u, 2u, 3u, 7u}) CHECK(distribution(6, {Stat::exc, Stat::fix, Stat::DES}, t) == distribution(6, {Stat::exc, Stat::fix, Stat::DES}, 1));
}

TEST_CASE("generating polynomials") {
    const Symbols& v = vars::stqY();
    const IntPoly a2 = gen_poly(all_perms(2), v, {{Stat::exc, "s"}, {Stat::des, "t"}, {Stat::maj, "q"}, {Stat::fix, "Y"}});
    CHECK(a2 == IntPoly::variable(v, "Y", 2) + IntPoly::variable(v, "s") * IntPoly::variable(v, "t") * IntPoly::variable(v, "q"));
    const auto s6 = gen_poly(all_perms(6), vars::s(), {{Stat::exc, "s"}});
    CHECK(s6.evaluate({Integer(1)}) == 720);
    // Eulerian numbers for exc on S_4: 1, 11, 11, 1
    const auto s4 = gen_poly(all_perms(4), vars::s(), {{Stat::exc, "s"}});
    CHECK(s4.coefficient(std::vector<int>{1}) == 11);
    CHECK(s4.coefficient(std::vector<int>{3}) == 1);
}

TEST_CASE("alternating permutations are counted by the tangent and secant numbers") {
    const std::vector<std::int64_t> euler{1, 1, 2, 5, 16, 61, 272, 1385};
    for (int n = 1; n <= 8; ++n) {
        std::int64_t a = 0, r = 0;
        for_each_alternating(n, false, [&](std::span<const int> w) {
            CHECK(descent_set(w).mask() == alternating_mask(n));
            ++a;
        });
        for_each_alternating(n, true, [&](std::span<const int>) { ++r; });
        CHECK(a == euler[static_cast<std::size_t>(n) - 1]);
        CHECK(r == a);
    }
}
