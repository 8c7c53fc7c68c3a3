#include <doctest.h>

#include "support.hpp"

using namespace weylbkk;
using testsupport::random_nonzero_scalar;
using testsupport::random_scalar;

TEST_CASE("ring operations on the three rings") {
    CHECK(Scalar::residue(2, 5) * Scalar::residue(3, 5) == Scalar::residue(1, 5));

    // inv(t) over F_3(t)
    Scalar t = Scalar::t(3);
    CHECK(t.inv() == Scalar::rational(FpPoly::constant(3, 1), FpPoly::t(3)));
    CHECK(t * t.inv() == Scalar::one(RingDescriptor::rational_functions(3)));

    CHECK_THROWS_AS(Scalar::integer(2).inv(), AlgebraError);
    CHECK_THROWS_WITH_AS(Scalar::integer(2).inv(), doctest::Contains("NoInverse"), AlgebraError);
    CHECK(Scalar::integer(-1).inv() == Scalar::integer(-1));

    CHECK_THROWS_AS(Scalar::residue(0, 5).inv(), AlgebraError);
    CHECK_THROWS_AS(Scalar::residue(1, 5) + Scalar::residue(1, 7), AlgebraError);
    CHECK_THROWS_AS(Scalar::residue(1, 5) + Scalar::integer(1), AlgebraError);
}

TEST_CASE("prime field modulus must be prime") {
    CHECK_THROWS_AS(RingDescriptor::prime_field(4), AlgebraError);
    CHECK_THROWS_AS(RingDescriptor::prime_field(1), AlgebraError);
    CHECK(is_prime(2));
    CHECK(is_prime(1021));
    CHECK(!is_prime(1));
    CHECK(!is_prime(1023));
    CHECK(next_prime(4) == 5);
    CHECK(primes_above(5, 3) == std::vector<long>{7, 11, 13});
}

TEST_CASE("field axioms, randomized") {
    std::mt19937_64 rng(11);
    for (RingDescriptor ring : {RingDescriptor::prime_field(7), RingDescriptor::rational_functions(5)}) {
        for (int i = 0; i < 40; ++i) {
            Scalar a = random_scalar(rng, ring);
            Scalar b = random_scalar(rng, ring);
            Scalar c = random_scalar(rng, ring);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(ring));
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(ring));
        }
    }
}

TEST_CASE("frobenius") {
    CHECK(Scalar::residue(3, 5).frobenius() == Scalar::residue(3, 5));
    CHECK(Scalar::t(5).frobenius() ==
          Scalar::rational(FpPoly::t(5).substitute_t_power(5), FpPoly::constant(5, 1)));

    // (t+1)/t over F_3 -> (t^3+1)/t^3
    Scalar a = Scalar::rational(FpPoly(3, {1, 1}), FpPoly::t(3));
    CHECK(a.frobenius() == Scalar::rational(FpPoly(3, {1, 0, 0, 1}), FpPoly(3, {0, 0, 0, 1})));

    CHECK_THROWS_AS(Scalar::integer(2).frobenius(), AlgebraError);

    SUBCASE("frobenius is a ring homomorphism") {
        std::mt19937_64 rng(12);
        for (RingDescriptor ring :
             {RingDescriptor::prime_field(11), RingDescriptor::rational_functions(3)}) {
            for (int i = 0; i < 30; ++i) {
                Scalar a = random_scalar(rng, ring);
                Scalar b = random_scalar(rng, ring);
                CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
                CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
            }
        }
    }
}

TEST_CASE("inverse frobenius") {
    Scalar t5 = Scalar::t(5).frobenius();
    CHECK(t5.inverse_frobenius() == Scalar::t(5));
    CHECK(Scalar::residue(4, 7).inverse_frobenius() == Scalar::residue(4, 7));
    CHECK_THROWS_AS(Scalar::t(5).inverse_frobenius(), AlgebraError);
    CHECK_THROWS_WITH_AS(Scalar::t(5).inverse_frobenius(), doctest::Contains("NotInFrobeniusImage"),
                         AlgebraError);

    std::mt19937_64 rng(13);
    for (RingDescriptor ring : {RingDescriptor::prime_field(5), RingDescriptor::rational_functions(7)}) {
        for (int i = 0; i < 30; ++i) {
            Scalar a = random_scalar(rng, ring);
            CHECK(a.frobenius().inverse_frobenius() == a);
        }
    }
}

TEST_CASE("reduction and lifting") {
    CHECK(reduce_mod_p(Scalar::integer(7), 5) == Scalar::residue(2, 5));
    CHECK(reduce_mod_p(Scalar::integer(-1), 5) == Scalar::residue(4, 5));
    CHECK(lift_to_integers(Scalar::residue(2, 5)) == Scalar::integer(2));

    std::mt19937_64 rng(14);
    for (int i = 0; i < 50; ++i) {
        Scalar a = Scalar::residue(static_cast<long>(rng() % 13), 13);
        CHECK(reduce_mod_p(lift_to_integers(a), 13) == a);
    }
}

namespace {
// Independent oracle: scan the symmetric range for the unique match.
long crt_brute_force(const std::vector<std::pair<long, long>>& residues) {
    long m = 1;
    for (auto [r, p] : residues) m *= p;
    for (long x = -m / 2 + ((m % 2 == 0) ? 1 : 0); x <= m / 2; ++x) {
        bool ok = true;
        for (auto [r, p] : residues)
            if (((x % p) + p) % p != r) { ok = false; break; }
        if (ok) return x;
    }
    REQUIRE(false);
    return 0;
}
} // namespace

TEST_CASE("crt reconstruction") {
    CHECK(crt_reconstruct({Scalar::residue(2, 5), Scalar::residue(2, 7)}) == Scalar::integer(2));
    CHECK(crt_reconstruct({Scalar::residue(4, 5), Scalar::residue(6, 7)}) == Scalar::integer(-1));

    // brute-force oracle confirms the frozen value -4
    CHECK(crt_brute_force({{1, 5}, {3, 7}}) == -4);
    CHECK(crt_reconstruct({Scalar::residue(1, 5), Scalar::residue(3, 7)}) == Scalar::integer(-4));

    CHECK_THROWS_AS(crt_reconstruct({}), AlgebraError);
    CHECK_THROWS_AS(crt_reconstruct({Scalar::residue(1, 5), Scalar::residue(2, 5)}), AlgebraError);

    SUBCASE("inverse of componentwise reduction on the symmetric range") {
        std::mt19937_64 rng(15);
        std::vector<long> ps = {5, 7, 11};
        long m = 5 * 7 * 11;
        for (int i = 0; i < 60; ++i) {
            long v = static_cast<long>(rng() % m) - m / 2; // in (-M/2, M/2]
            std::vector<Scalar> rs;
            for (long p : ps) rs.push_back(reduce_mod_p(Scalar::integer(v), p));
            CHECK(crt_reconstruct(rs) == Scalar::integer(v));
        }
    }

    SUBCASE("oracle agreement on random residues") {
        std::mt19937_64 rng(16);
        for (int i = 0; i < 40; ++i) {
            long r1 = static_cast<long>(rng() % 5), r2 = static_cast<long>(rng() % 7);
            CHECK(crt_reconstruct({Scalar::residue(r1, 5), Scalar::residue(r2, 7)}) ==
                  Scalar::integer(crt_brute_force({{r1, 5}, {r2, 7}})));
        }
    }
}

TEST_CASE("rational functions are canonical") {
    // (t^2-1)/(t-1) reduces to t+1
    Scalar a = Scalar::rational(FpPoly(5, {-1, 0, 1}), FpPoly(5, {-1, 1}));
    CHECK(a == Scalar::rational(FpPoly(5, {1, 1}), FpPoly::constant(5, 1)));
    // denominator is made monic: 1/(2t) == 3/t over F_5
    Scalar b = Scalar::rational(FpPoly::constant(5, 1), FpPoly(5, {0, 2}));
    CHECK(b.rational_value().den() == FpPoly::t(5));
    CHECK(b.rational_value().num() == FpPoly::constant(5, 3));
    CHECK_THROWS_AS(Scalar::rational(FpPoly::constant(5, 1), FpPoly::zero(5)), AlgebraError);
}
