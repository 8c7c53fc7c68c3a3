#include <doctest.h>

#include "support.hpp"

using namespace weylbkk;
using testsupport::random_center_poly;
using testsupport::random_weyl;

namespace {

const RingDescriptor kF5 = RingDescriptor::prime_field(5);

Poly xi(unsigned n, unsigned i, const RingDescriptor& ring = kF5) {
    return Poly::variable(2 * n, ring, i);
}

// Definitional oracle: a is central iff it commutes with every generator.
bool central_by_commutators(const WeylElement& a) {
    for (unsigned g = 1; g <= 2 * a.pairs(); ++g)
        if (!commutator(WeylElement::generator(a.pairs(), a.ring(), g), a).is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("centrality criterion") {
    auto x = WeylElement::generator(1, kF5, 1);
    auto y = WeylElement::generator(1, kF5, 2);
    CHECK(is_central(pow(x, 5)));
    CHECK(!is_central(x));
    CHECK(is_central(pow(x, 5) * pow(y, 10) + Scalar::residue(3, 5) * WeylElement::one(1, kF5)));

    SUBCASE("agrees with the commutator test") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 30; ++i) {
            unsigned n = 1 + i % 2;
            auto e = random_weyl(rng, n, kF5, 6, 3);
            CHECK(is_central(e) == central_by_commutators(e));
            auto c = embed_center(random_center_poly(rng, n, kF5, 2, 2));
            CHECK(is_central(c));
            CHECK(central_by_commutators(c));
        }
    }
}

TEST_CASE("extract and embed") {
    auto x = WeylElement::generator(1, kF5, 1);
    auto y = WeylElement::generator(1, kF5, 2);
    CHECK(extract_center(pow(x, 5)) == xi(1, 1));
    CHECK(extract_center(pow(x, 5) * pow(y, 5) + Scalar::residue(2, 5) * WeylElement::one(1, kF5)) ==
          xi(1, 1) * xi(1, 2) + Poly::constant(2, Scalar::residue(2, 5)));
    CHECK_THROWS_AS(extract_center(x), AlgebraError);

    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        unsigned n = 1 + i % 2;
        auto c = random_center_poly(rng, n, kF5, 3, 3);
        CHECK(extract_center(embed_center(c)) == c);
    }
}

TEST_CASE("bracket on generators") {
    // n=1: {xi1, xi2} = -1, {xi2, xi1} = 1 (the latter via Wilson's theorem)
    CHECK(poisson_bracket(xi(1, 1), xi(1, 2)) == Poly::constant(2, Scalar::residue(-1, 5)));
    CHECK(poisson_bracket(xi(1, 2), xi(1, 1)) == Poly::one(2, kF5));
    for (unsigned n : {1u, 2u}) {
        for (long p : {5L, 7L}) {
            auto ring = RingDescriptor::prime_field(p);
            for (unsigned i = 1; i <= 2 * n; ++i)
                for (unsigned j = 1; j <= 2 * n; ++j) {
                    auto want = Poly::constant(2 * n, Scalar::from_int(ring, symplectic_form(n, i, j)));
                    CHECK(poisson_bracket(xi(n, i, ring), xi(n, j, ring)) == want);
                    CHECK(classical_bracket(xi(n, i, ring), xi(n, j, ring)) == want);
                }
        }
    }
}

TEST_CASE("bracket fixtures") {
    auto gf7 = RingDescriptor::prime_field(7);
    CHECK(poisson_bracket(pow(xi(1, 1, gf7), 2), xi(1, 2, gf7)) ==
          Scalar::residue(-2, 7) * xi(1, 1, gf7));
    CHECK(classical_bracket(xi(1, 1) * xi(1, 2), xi(1, 2)) == -xi(1, 2));

    std::mt19937_64 rng(33);
    auto a = random_center_poly(rng, 1, kF5, 3, 3);
    CHECK(poisson_bracket(a, a).is_zero());
    CHECK(classical_bracket(a, a).is_zero());
}

TEST_CASE("the two brackets agree") {
    std::mt19937_64 rng(34);
    for (long p : {5L, 7L, 11L, 13L}) {
        auto ring = RingDescriptor::prime_field(p);
        for (int i = 0; i < 15; ++i) {
            unsigned n = 1 + i % 2;
            auto a = random_center_poly(rng, n, ring, 3, 3);
            auto b = random_center_poly(rng, n, ring, 3, 3);
            CHECK(poisson_bracket(a, b) == classical_bracket(a, b));
        }
    }
}

TEST_CASE("antisymmetry, Leibniz, Jacobi") {
    std::mt19937_64 rng(35);
    for (long p : {5L, 7L}) {
        auto ring = RingDescriptor::prime_field(p);
        for (int i = 0; i < 12; ++i) {
            unsigned n = 1 + i % 2;
            auto a = random_center_poly(rng, n, ring, 3, 2);
            auto b = random_center_poly(rng, n, ring, 3, 2);
            auto c = random_center_poly(rng, n, ring, 2, 2);
            Poly zero(2 * n, ring);
            CHECK(poisson_bracket(a, b) + poisson_bracket(b, a) == zero);
            CHECK(poisson_bracket(a, b * c) ==
                  poisson_bracket(a, b) * c + b * poisson_bracket(a, c));
            CHECK(poisson_bracket(a, poisson_bracket(b, c)) +
                      poisson_bracket(b, poisson_bracket(c, a)) +
                      poisson_bracket(c, poisson_bracket(a, b)) ==
                  zero);
        }
    }
}

TEST_CASE("the bracket does not depend on the lift") {
    // recompute with a lift perturbed by p * (random integer element)
    std::mt19937_64 rng(36);
    const long p = 7;
    auto ring = RingDescriptor::prime_field(p);
    for (int i = 0; i < 12; ++i) {
        unsigned n = 1 + i % 2;
        auto a = random_center_poly(rng, n, ring, 2, 2);
        auto b = random_center_poly(rng, n, ring, 2, 2);

        WeylElement a0 = lift_to_integers(embed_center(a)) +
                         Scalar::integer(p) * random_weyl(rng, n, RingDescriptor::integers(), 3, 2);
        WeylElement b0 = lift_to_integers(embed_center(b)) +
                         Scalar::integer(p) * random_weyl(rng, n, RingDescriptor::integers(), 3, 2);
        WeylElement num = divide_exact(commutator(a0, b0), p);
        Poly perturbed = -extract_center(reduce_mod_p(num, p));
        CHECK(perturbed == poisson_bracket(a, b));
    }
}

TEST_CASE("bracket ring requirements") {
    auto zz = RingDescriptor::integers();
    CHECK_THROWS_AS(poisson_bracket(Poly::variable(2, zz, 1), Poly::variable(2, zz, 2)), AlgebraError);
    auto f5t = RingDescriptor::rational_functions(5);
    CHECK_THROWS_AS(poisson_bracket(Poly::variable(2, f5t, 1), Poly::variable(2, f5t, 2)), AlgebraError);
    // classical bracket is fine over any ring
    CHECK(classical_bracket(Poly::variable(2, zz, 1), Poly::variable(2, zz, 2)) ==
          Poly::constant(2, Scalar::integer(-1)));
    CHECK(classical_bracket(Poly::variable(2, f5t, 1), Poly::variable(2, f5t, 2)) ==
          Poly::constant(2, Scalar::from_int(f5t, -1)));
}
