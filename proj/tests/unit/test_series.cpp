#include "catch_amalgamated.hpp"

#include "permstat/permstat.hpp"

using namespace permstat;

namespace {

IntPoly sv(int e = 1) { return IntPoly::variable(vars::s(), "s", e); }
IntPoly one() { return IntPoly::constant(vars::s(), 1); }

TruncSeries<IntPoly> egf(int order, const std::function<IntPoly(int)>& coeff) {
    std::vector<IntPoly> c;
    for (int n = 0; n <= order; ++n) c.push_back(coeff(n));
    return TruncSeries<IntPoly>(SeriesFlavor::Exponential, "u", c);
}

IntPoly power(const IntPoly& p, int e) {
    IntPoly r = IntPoly::constant(p.symbols(), 1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

TEST_CASE("exponential product follows the binomial theorem") {
    const int N = 8;
    const auto a = egf(N, [](int n) { return sv(n); });
    const auto b = egf(N, [](int) { return one(); });
    const auto c = a * b;
    for (int n = 0; n <= N; ++n) CHECK(c[n] == power(sv() + one(), n));
}

TEST_CASE("ordinary product is a Cauchy convolution") {
    const TruncSeries<Integer> a(SeriesFlavor::Ordinary, "u", {1, 1, 0, 0, 0});
    const auto sq = a * a;
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 2);
    CHECK(sq[2] == 1);
    CHECK(sq[3] == 0);
}

TEST_CASE("reciprocal of 1 - u is the geometric series") {
    const TruncSeries<Integer> a(SeriesFlavor::Ordinary, "u", {1, -1, 0, 0, 0, 0});
    const auto r = series_reciprocal(a);
    for (int n = 0; n <= 5; ++n) CHECK(r[n] == 1);
}

TEST_CASE("reciprocal of e^u is e^{-u}") {
    const TruncSeries<Integer> e(SeriesFlavor::Exponential, "u", std::vector<Integer>(7, 1));
    const auto r = series_reciprocal(e);
    for (int n = 0; n <= 6; ++n) CHECK(r[n] == (n % 2 == 0 ? 1 : -1));
}

TEST_CASE("derangement numbers from e^{-u} / (1 - u)") {
    // ordinary form: sum D_n u^n / n!; check via the exponential product of e^{-u} with n!
    const int N = 9;
    std::vector<Integer> fact, alt;
    for (int n = 0; n <= N; ++n) {
        fact.push_back(factorial(n));
        alt.emplace_back(n % 2 == 0 ? 1 : -1);
    }
    const auto d = TruncSeries<Integer>(SeriesFlavor::Exponential, "u", alt) * TruncSeries<Integer>(SeriesFlavor::Exponential, "u", fact);
    for (int n = 0; n <= N; ++n) CHECK(d[n] == derangement_number(n));
}

TEST_CASE("zero constant term has no reciprocal") {
    const TruncSeries<Integer> a(SeriesFlavor::Ordinary, "u", {0, 1});
    CHECK_THROWS_AS(series_reciprocal(a), std::domain_error);
}

TEST_CASE("series of different flavors or orders do not mix") {
    const TruncSeries<Integer> a(SeriesFlavor::Ordinary, "u", {1, 1});
    const TruncSeries<Integer> b(SeriesFlavor::Exponential, "u", {1, 1});
    const TruncSeries<Integer> c(SeriesFlavor::Ordinary, "u", {1, 1, 1});
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("q-Pochhammer symbol") {
    const Symbols& v = vars::stq();
    const IntPoly t = IntPoly::variable(v, "t"), q = IntPoly::variable(v, "q"), e = IntPoly::constant(v, 1);
    CHECK(q_pochhammer(t, "q", 2) == e - t - t * q + t * t * q);
    CHECK(q_pochhammer(t, "q", 0) == e);
    CHECK(q_pochhammer(t, "q", 3) == (e - t) * (e - t * q) * (e - t * q * q));
    CHECK(q_pochhammer(t, "q", 3, "t", 1) == e - t - t * q - t * q * q);
    CHECK_THROWS_AS(q_pochhammer(t, "q", -1), std::invalid_argument);
}

TEST_CASE("splitting a polynomial by powers of a variable") {
    const Symbols& v = vars::stq();
    const IntPoly p = IntPoly::variable(v, "t", 2) * IntPoly::variable(v, "s") + IntPoly::variable(v, "q");
    const auto s = to_series(p, "t", 3);
    CHECK(s[0] == IntPoly::variable(v, "q"));
    CHECK(s[1].is_zero());
    CHECK(s[2] == IntPoly::variable(v, "s"));
    CHECK(s[3].is_zero());
}

TEST_CASE("multivariate geometric expansion") {
    const Symbols xy = make_symbols({"x", "y"});
    const IntPoly x = IntPoly::variable(xy, "x"), y = IntPoly::variable(xy, "y"), e = IntPoly::constant(xy, 1);
    const IntPoly r = multivar_geometric_expand({e - x, e - y}, {3, 2});
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 2; ++j) CHECK(r.coefficient({i, j}) == 1);
    CHECK(r.size() == 12);
    const IntPoly neg = multivar_geometric_expand({x - e}, {4, 0});
    CHECK(neg.coefficient({2, 0}) == -1);
    CHECK_THROWS_AS(multivar_geometric_expand({x}, {2, 2}), std::domain_error);
    CHECK(truncate_to_box(x * x * y + x, {1, 5}) == x);
}

TEST_CASE("coefficient of x^3 y in the two-block fraction is M(3,1)") {
    CHECK(M_series(Composition{3, 1}) == 2);
    CHECK(M_series(Composition{1, 1, 1}) == M_brute(Composition{1, 1, 1}));
}
