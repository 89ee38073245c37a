#include "catch_amalgamated.hpp"

#include <map>

#include "permstat/permstat.hpp"

using namespace permstat;

namespace {

int inv_oracle(const std::vector<int>& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

// Leftmost trough: first i with w_{i-1} >= w_i < w_{i+1}, padding w_0 = inf, w_{n+1} = inf.
bool desarrangement_oracle(const std::vector<int>& w) {
    const int inf = 1 << 20;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int prev = i == 0 ? inf : w[i - 1];
        const int next = i + 1 == w.size() ? inf : w[i + 1];
        if (prev >= w[i] && w[i] < next) return (i + 1) % 2 == 0;
    }
    return false;
}

}  // namespace

TEST_CASE("desarrangement by leftmost trough") {
    CHECK(is_desarrangement(std::vector<int>{3, 1, 2}));
    CHECK_FALSE(is_desarrangement(std::vector<int>{1, 2, 3}));
    CHECK(is_desarrangement(std::vector<int>{2, 1, 4, 3}));
    for (const auto w : all_perms(6)) CHECK(is_desarrangement(w) == desarrangement_oracle({w.begin(), w.end()}));
}

TEST_CASE("22-letter hook factorization") {
    const Word w({1, 2, 4, 5, 6, 4, 5, 6, 4, 1, 3, 6, 5, 5, 4, 6, 1, 1, 4, 5, 1, 1});
    const auto f = hook_factorize(w);
    CHECK(f.prefix == std::vector<int>{1, 2, 4, 5});
    const std::vector<std::vector<int>> hooks{{6, 4, 5, 6}, {4, 1, 3}, {6, 5}, {5, 4}, {6, 1, 1, 4}, {5, 1, 1}};
    CHECK(f.hooks == hooks);
    CHECK(pix(w) == 4);
    CHECK(lec(w) == 11);
    int sum = 0;
    for (const auto& h : hooks) sum += inv_oracle(h);
    CHECK(sum == 11);
    CHECK(f.concatenate() == w.vec());
}

TEST_CASE("hooks and small factorizations") {
    CHECK(is_hook(std::vector<int>{6, 1, 1, 4}));
    CHECK(is_hook(std::vector<int>{2, 1}));
    CHECK_FALSE(is_hook(std::vector<int>{1, 2}));
    CHECK_FALSE(is_hook(std::vector<int>{3, 2, 1}));
    const Word w{2, 1, 4, 3};
    CHECK(lec(w) == 2);
    CHECK(pix(w) == 0);
    CHECK(hook_factorize(Word{1, 2, 3}).hooks.empty());
    CHECK_THROWS_AS(hook_factorize(Word{}), std::invalid_argument);
}

TEST_CASE("rotations") {
    CHECK(left_rotate(std::vector<int>{1, 2, 3}) == std::vector<int>{2, 3, 1});
    CHECK(right_rotate(std::vector<int>{1, 2, 3}) == std::vector<int>{3, 1, 2});
    CHECK(right_rotate(left_rotate(Word{4, 1, 3, 2})) == Word{4, 1, 3, 2});
}

TEST_CASE("rotation classes") {
    // lec(2143) = 2, lec(3214) = 1
    CHECK(lec(Word{3, 2, 1, 4}) == 1);
    CHECK(classify(Word{2, 1, 4, 3}) == RotationClass::B0);
    const auto c = classify(Word{3, 1, 2});
    CHECK((c == RotationClass::A0 || c == RotationClass::B0));
    CHECK(classify(Word{1, 2, 3}) == RotationClass::None);
    CHECK(to_string(RotationClass::A1) == "A1");
}

TEST_CASE("classify agrees with lec of the rotated word") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto w : all_perms(n)) {
            const int p = pix(w);
            if (p > 1 || (p == 0 && !is_desarrangement(w))) {
                CHECK(classify(w) == RotationClass::None);
                continue;
            }
            auto tag = [](int drop, RotationClass same, RotationClass down) {
                return drop == 0 ? same : drop == 1 ? down : RotationClass::None;
            };
            if (p == 0) {
                CHECK(classify(w) == tag(lec(w) - lec(right_rotate(w)), RotationClass::A0, RotationClass::B0));
            } else {
                // a one-pixed word is the right rotation of the desarrangement left_rotate(w)
                const auto r = left_rotate(w);
                const auto expected = pix(r) != 0 ? RotationClass::None : tag(lec(r) - lec(w), RotationClass::A1, RotationClass::B1);
                CHECK(classify(w) == expected);
            }
        }
    }
}

TEST_CASE("standardization of multiset words") {
    CHECK(standardize(Word{1, 2, 1, 1}, Composition{3, 1}).vec() == std::vector<int>{1, 4, 2, 3});
    CHECK(standardize(Word{2, 2, 1}, Composition{1, 2}).vec() == std::vector<int>{2, 3, 1});
    CHECK(letter_content(std::vector<int>{2, 2, 1}) == Composition{1, 2});
    const Composition m{2, 1, 2};
    for (const auto& w : rearrangement_class(m))
        CHECK(destandardize(standardize(w, m), m).vec() == w);
}

TEST_CASE("rearrangement class sizes are multinomials") {
    const std::vector<Composition> ms{{1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 2, 3}, {2, 2, 2}, {1, 1, 1, 1, 1}};
    for (const auto& m : ms) {
        std::int64_t count = 0;
        for (const auto& w : rearrangement_class(m)) {
            (void)w;
            ++count;
        }
        Integer multinomial = factorial(m.total());
        for (int p : m.parts()) multinomial /= factorial(p);
        CHECK(Integer(count) == multinomial);
    }
    CHECK_THROWS_AS(rearrangement_class(Composition{6, 6}), std::out_of_range);
}
