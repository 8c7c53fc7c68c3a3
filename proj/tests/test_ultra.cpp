#include <doctest.h>

#include "weylbkk/ultra.hpp"

#include <random>
#include <set>

using namespace weylbkk;
using namespace weylbkk::ultra;

TEST_CASE("binary decomposition") {
    CHECK(binary_point(0, 4).to_string() == "0000");
    CHECK(binary_point(1, 4).to_string() == "1000");
    CHECK(binary_point(6, 4).to_string() == "0110"); // 6 = 0*1 + 1*2 + 1*4
    CHECK_THROWS_AS(binary_point(16, 4), AlgebraError);
    CHECK_THROWS_WITH_AS(binary_point(16, 4), doctest::Contains("Overflow"), AlgebraError);

    SUBCASE("injective on [0, 2^L)") {
        std::set<std::string> seen;
        for (unsigned long a = 0; a < 64; ++a) seen.insert(binary_point(a, 6).to_string());
        CHECK(seen.size() == 64);
    }
}

TEST_CASE("the 2-adic metric") {
    auto x = binary_point(5, 4);
    CHECK(d2(x, x) == Rational{0, 1});
    CHECK(d2(binary_point(1, 4), binary_point(0, 4)) == Rational{1, 1});
    CHECK(d2(binary_point(2, 4), binary_point(6, 4)) == Rational{1, 3});
    CHECK_THROWS_AS(d2(binary_point(0, 3), binary_point(0, 4)), AlgebraError);

    SUBCASE("ultrametric inequality") {
        std::mt19937_64 rng(81);
        auto maxr = [](Rational a, Rational b) { return a < b ? b : a; };
        for (int i = 0; i < 200; ++i) {
            auto a = binary_point(rng() % 256, 8);
            auto b = binary_point(rng() % 256, 8);
            auto c = binary_point(rng() % 256, 8);
            Rational lhs = d2(a, c), bound = maxr(d2(a, b), d2(b, c));
            CHECK((lhs < bound || lhs == bound));
        }
    }
}

TEST_CASE("nearest point of the truncated prime range") {
    SUBCASE("membership gives distance zero") {
        auto x = binary_point(5, 3);
        auto [a, e] = nearest(x, 7);
        CHECK(a == 5);
        CHECK(d2(x, e) == Rational{0, 1});
    }
    SUBCASE("all-ones against p=2") {
        BitString ones;
        ones.bits = {1, 1, 1};
        auto [a, e] = nearest(ones, 2);
        CHECK(a == 1);
        CHECK(d2(ones, e) == Rational{1, 2});
    }
    SUBCASE("x = e(4), p = 3") {
        auto x = binary_point(4, 3);
        auto [a, e] = nearest(x, 3);
        CHECK(a == 0);
        CHECK(d2(x, e) == Rational{1, 3});
    }
    SUBCASE("enumerated small cases") {
        BitString x;
        x.bits = {1, 1};
        auto [a, e] = nearest(x, 3); // e(1) = 10 is the only depth-1 match
        CHECK(a == 1);
        CHECK(d2(x, e) == Rational{1, 2});
        BitString y;
        y.bits = {0, 1};
        auto [b, eb] = nearest(y, 2); // e(0) = 00 matches position 1, e(1) = 10 does not
        CHECK(b == 0);
        CHECK(d2(y, eb) == Rational{1, 2});
    }
    CHECK_THROWS_AS(nearest(binary_point(0, 2), 5), AlgebraError);
}

TEST_CASE("approximation bound") {
    CHECK(approx_check(binary_point(123, 9), 257, 8).pass);
    CHECK(approx_check(binary_point(3, 3), 5, 2).pass);
    CHECK_THROWS_AS(approx_check(binary_point(3, 3), 3, 2), AlgebraError);
    CHECK_THROWS_WITH_AS(approx_check(binary_point(3, 3), 3, 2),
                         doctest::Contains("PreconditionViolated"), AlgebraError);
    CHECK_THROWS_AS(approx_check(binary_point(1, 2), 17, 3), AlgebraError); // m > L

    SUBCASE("exhaustive at small truncation") {
        for (unsigned L = 3; L <= 6; ++L) {
            for (long p : {5L, 11L, 17L, 37L}) {
                if (p > (1L << L)) continue;
                for (unsigned long v = 0; v < (1UL << L); ++v)
                    for (unsigned m = 1; m <= L; ++m) {
                        if (p <= (1L << m)) break;
                        CHECK(approx_check(binary_point(v, L), p, m).pass);
                    }
            }
        }
    }
}
