#include "catch_amalgamated.hpp"

#include "permstat/permstat.hpp"

using namespace permstat;

namespace {

IntPoly s(int e = 1) { return IntPoly::variable(vars::s(), "s", e); }

std::string first_failure(const Report& r) { return r.failures.empty() ? std::string() : r.failures.front(); }

}  // namespace

TEST_CASE("descent-class fixed point identity") {
    const auto r = verify_thm1(8, DescentSet(8, {1, 2, 3, 6}));
    CHECK(r.report.ok);
    CHECK(r.F_poly == s(2) * Integer(2));
    CHECK(r.G_poly == s(2) * Integer(2));
    for (int n = 1; n <= 6; ++n) CHECK(verify_thm1_all(n).ok);
}

TEST_CASE("max fixed points over a descent class") {
    CHECK(max_fix_over_descent_class(8, DescentSet(8, {1, 2, 3, 6})) == 4);
    CHECK(max_fix_over_descent_class(5, DescentSet(5)) == 5);
    // a single block of odd size cannot reach n - |J|
    CHECK(is_single_block(DescentSet(4, {1, 2, 3})));
    CHECK(max_fix_over_descent_class(4, DescentSet(4, {1, 2, 3})) < 1);
    CHECK_FALSE(is_single_block(DescentSet(5, {1, 3})));
}

TEST_CASE("single odd blocks stay below the fixed point bound") {
    const auto r = verify_thm1_all(7);
    CHECK(r.ok);
    bool reported = false;
    for (const auto& [k, v] : r.facts) {
        CHECK(k != "odd_block_reaching_bound");
        if (k == "odd_block_max_fix") {
            reported = true;
            CHECK(v.find("{1,2,3}:3") != std::string::npos);
        }
    }
    CHECK(reported);
}

TEST_CASE("derangement minus one-fixed-point polynomial") {
    const auto r = verify_thm2(6, DescentSet(6, {1, 3, 4, 5}));
    CHECK(r.zero == s(4) + s(3) * Integer(5));
    CHECK(r.one == s(3) * Integer(4) + s(2) * Integer(2));
    CHECK(r.quotient == s(3) + s(2) * Integer(2));
    CHECK_THROWS_AS(verify_thm2(4, DescentSet::full(4)), std::domain_error);
    const auto empty = verify_thm2(2, DescentSet(2));
    CHECK(empty.quotient.is_zero());
    const auto inv = verify_thm2(6, DescentSet(6, {1, 3, 4, 5}), ExcVariant::iexc);
    CHECK(inv.report.ok);
    CHECK(inv.quotient.all_coefficients_nonnegative());
    for (int n = 1; n <= 6; ++n) {
        CHECK(verify_thm2_all(n, ExcVariant::exc).ok);
        CHECK(verify_thm2_all(n, ExcVariant::iexc).ok);
    }
}

TEST_CASE("rotation class sums") {
    const auto pair = rearrangement_class_sums(Composition{1, 1});
    CHECK(pair.balanced());
    for (int n = 1; n <= 5; ++n) CHECK(verify_thm2_chain(n).ok);
    CHECK(verify_rearrangement_classes_all(5).ok);
}

TEST_CASE("classes read directly on permutations do not balance") {
    // over DES = {2} in S_3, {132, 312}: the rotation classes must be read on words
    const auto r = verify_thm2_chain(3);
    CHECK(r.ok);
    bool found = false;
    for (const auto& [k, v] : r.facts)
        if (k == "direct_class_unbalanced_J") {
            found = true;
            CHECK(v == "2");
        }
    CHECK(found);
}

TEST_CASE("alternating permutations") {
    for (int n = 2; n <= 4; ++n) CHECK(verify_cor3(n).ok);
    const auto c = alternating_counts(4);
    CHECK(c.d[2] == 1);
    for (int n = 2; n <= 8; ++n) CHECK(verify_cor4(n).ok);
    for (int n = 1; n <= 8; ++n) CHECK(verify_alternating_fix_bound(n).ok);
}

TEST_CASE("zero and one fixed points differ for alternating permutations of size 2") {
    // 21 is the only alternating permutation of [2]; its descent set is all of [1]
    const auto c = alternating_counts(2);
    CHECK(c.d[0] == 1);
    CHECK(c.d[1] == 0);
    CHECK(c.d_star[0] == c.d_star[1]);
}

TEST_CASE("standardization bijection on alternating permutations") {
    const Permutation pi({3, 2, 6, 4, 5, 1, 10, 8, 9, 7});
    const Permutation tau = prop7_map(pi);
    CHECK(tau.vec() == std::vector<int>{2, 3, 1, 5, 4});
    CHECK(exc_count(pi) == 3);
    CHECK(exc_count(tau) == 3);
    CHECK(prop7_inverse(tau) == pi);
    for (int n = 1; n <= 5; ++n) CHECK(verify_prop7(n).ok);
    CHECK_THROWS_AS(prop7_map(Permutation({1, 2, 3, 4})), std::invalid_argument);
    CHECK_THROWS_AS(prop7_map(Permutation({2, 1, 3})), std::invalid_argument);
}

TEST_CASE("lec drop dichotomy and equidistributions") {
    for (int n = 1; n <= 7; ++n) CHECK(verify_lec_drop(n).ok);
    for (int n = 1; n <= 6; ++n) {
        CHECK(verify_prop8(n).ok);
        CHECK(verify_prop13(n).ok);
        CHECK(verify_dw(n).ok);
    }
}

TEST_CASE("counting forms of the descent-class identity") {
    std::map<std::uint64_t, Thm16Counts> counts;
    const auto r = verify_thm16(6, 2, &counts);
    CHECK(r.ok);
    const auto& c = counts.at(DescentSet(6, {1, 3, 4, 5}).mask());
    CHECK(c.des_derangements == 6);
    CHECK(c.des_one_fixed == 6);
    for (int n = 1; n <= 5; ++n) CHECK(verify_thm16(n).ok);
}

TEST_CASE("maximal fixed point verifier and the exponential-series verifier") {
    CHECK(verify_thm5(6).ok);
    CHECK(verify_cor15(8, 7).ok);
    CHECK(verify_four_variable_extraction(5).ok);
}

TEST_CASE("reports carry counterexamples") {
    Report r("demo");
    r.expect(true, [] { return std::string("unused"); });
    for (int i = 0; i < 8; ++i) r.expect(false, [i] { return "case " + std::to_string(i); });
    CHECK_FALSE(r.ok);
    CHECK(r.checks == 9);
    CHECK(r.failures.size() == Report::kMaxWitnesses);
    CHECK(first_failure(r) == "case 0");
}
