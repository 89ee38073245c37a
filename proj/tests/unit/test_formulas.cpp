#include "catch_amalgamated.hpp"

#include "permstat/permstat.hpp"

using namespace permstat;

namespace {

IntPoly stq(const char* name, int e = 1) { return IntPoly::variable(vars::stq(), name, e); }
IntPoly s1(int e = 1) { return IntPoly::variable(vars::s(), "s", e); }
IntPoly k1(long long k) { return IntPoly::constant(vars::s(), Integer(k)); }

std::int64_t derangements_by_count(int n) {
    std::int64_t c = 0;
    for (const auto w : all_perms(n)) c += fix_count(w) == 0;
    return c;
}

}  // namespace

TEST_CASE("derangement numbers and binomials") {
    for (int n = 0; n <= 8; ++n) CHECK(derangement_number(n) == derangements_by_count(n));
    CHECK(derangement_number(2) == 1);
    CHECK(derangement_number(5) == 44);
    CHECK(derangement_number(20) == Integer("895014631192902121"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(factorial(0) == 1);
}

TEST_CASE("maximal fixed point counts") {
    CHECK(M_series(Composition{3, 1}) == 2);
    CHECK(M_series(Composition{1, 3}) == 2);
    CHECK(M_series(Composition{2}) == 1);
    CHECK(M_series(Composition{3}) == 0);
    CHECK(M_two_block(3, 1) == 2);
    CHECK(M_brute(Composition{1, 1}) == 1);
    CHECK(M_series(Composition{1, 1, 1}) == M_brute(Composition{1, 1, 1}));
    for (int a = 1; a <= 10; ++a) CHECK(M_series(Composition{a}) == (a % 2 == 0 ? 1 : 0));
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; a + b <= 10; ++b) CHECK(M_two_block(a, b) == M_two_block(b, a));
    CHECK_THROWS(M_series(Composition{1, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("compositions of a total") {
    CHECK(compositions(4).size() == 8);
    CHECK(compositions(1).front() == Composition{1});
    for (const auto& a : compositions(6)) CHECK(a.total() == 6);
}

TEST_CASE("four-variable generating polynomial") {
    const Symbols& v = vars::stqY();
    CHECK(A_n_extract(0) == IntPoly::constant(v, 1));
    CHECK(A_n_extract(1) == IntPoly::variable(v, "Y"));
    CHECK(A_n_extract(2) == IntPoly::variable(v, "Y", 2) + IntPoly::variable(v, "s") * IntPoly::variable(v, "t") * IntPoly::variable(v, "q"));
    for (int n = 0; n <= 5; ++n) CHECK(A_n_extract(n) == A_n_brute(n));
    CHECK(A_n_extract(5).evaluate({Integer(1), Integer(1), Integer(1), Integer(1)}) == 120);
    CHECK_THROWS_AS(A_n_extract(kMaxANExtract + 1), std::out_of_range);
}

TEST_CASE("remainders r_n") {
    CHECK(r_small(1) == IntPoly::constant(vars::stq(), -1));
    CHECK(r_small(2) == stq("s") * stq("t") * stq("q"));
    CHECK(r_small(3) == -(stq("s") * stq("t", 2) * stq("q", 3)));
    CHECK(r_small(4).is_zero() == false);
}

TEST_CASE("fixed point quotient Q_n(s,t,q)") {
    CHECK(verify_thm13(1).quotient.is_zero());
    CHECK(verify_thm13(2).quotient.is_zero());
    const auto r3 = verify_thm13(3);
    CHECK(r3.quotient == stq("s") * stq("t") * stq("q", 2));
    const IntPoly diff3 = stq("s", 2) * stq("t") * stq("q", 2) - stq("s") * stq("t") * stq("q", 2) - stq("s") * stq("t", 2) * stq("q", 3);
    CHECK(r3.difference == diff3);
    const IntPoly q4 = stq("s") * stq("t", 2) * stq("q", 4) + stq("s", 2) * stq("t") * stq("q", 3) + stq("s") * stq("t", 2) * stq("q", 3) +
                       stq("s") * stq("t") * stq("q", 2);
    CHECK(verify_thm13(4).quotient == q4);
    // at t = q = 1 this object is not the exponential-series Q_3(s) = 1
    CHECK(r3.quotient.substitute("t", Integer(1)).substitute("q", Integer(1)) == stq("s"));
    for (int n = 1; n <= 6; ++n) CHECK(verify_thm13(n).report.ok);
}

TEST_CASE("quotients Q_n(s) from the exponential series") {
    const auto q = H_expand(8);
    CHECK(q[3] == k1(1));
    CHECK(q[4] == s1() + k1(3));
    CHECK(q[5] == s1(2) + s1() * Integer(17) + k1(4));
    CHECK(q[6] == s1(3) + s1(2) * Integer(46) + s1() * Integer(80) + k1(5));
    CHECK(q[7] == s1(4) + s1(3) * Integer(107) + s1(2) * Integer(563) + s1() * Integer(250) + k1(6));
    for (int n = 3; n <= 8; ++n) {
        CHECK(q[static_cast<std::size_t>(n)].evaluate({Integer(1)}) == Q1_formula(n));
        const Integer d = derangement_number(n);
        CHECK(Q1_formula(n) == Integer(n % 2 == 1 ? Integer(d / 2) : Integer((d - 1) / 2)));
    }
    CHECK(Q1_formula(4) == 4);
    CHECK(Q1_formula(5) == 22);
    CHECK(Q1_formula(6) == 132);
}

TEST_CASE("type counts balance") {
    const std::vector<std::int64_t> expected{1, 4, 22, 132, 927};
    for (int n = 3; n <= 7; ++n) {
        const auto c = type_counts(n);
        CHECK(c.a0 == expected[static_cast<std::size_t>(n - 3)]);
        CHECK(c.excluded == (n % 2 == 0 ? 1 : 0));
        CHECK(typeB_count(n) == c.b0);
        CHECK(Integer(typeB_count(n)) == Q1_formula(n));
    }
}

TEST_CASE("consistency of the three-variable and four-variable polynomials") {
    CHECK(fixed_point_series_consistency(6).ok);
}
