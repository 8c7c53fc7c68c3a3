#include <doctest.h>

#include "weylbkk/io.hpp"

#include "support.hpp"

using namespace weylbkk;
using testsupport::random_poly;
using testsupport::random_weyl;

namespace {
const RingDescriptor kZZ = RingDescriptor::integers();
}

TEST_CASE("expression parsing") {
    auto gf7 = RingDescriptor::prime_field(7);
    CHECK(io::parse_weyl_expr("y1*x1", 1, kZZ) == io::parse_weyl_expr("x1*y1 + 1", 1, kZZ));
    CHECK(io::parse_weyl_expr("(x1+y1)^2", 1, kZZ) ==
          io::parse_weyl_expr("x1^2 + 2*x1*y1 + y1^2 + 1", 1, kZZ));
    CHECK(io::parse_weyl_expr("-3", 1, kZZ) == WeylElement::constant(1, Scalar::integer(-3)));
    CHECK(io::parse_weyl_expr("-3*x1 + 2", 1, gf7) ==
          io::parse_weyl_expr("4*x1 + 2", 1, gf7)); // negative literals reduce on parse

    CHECK_THROWS_AS(io::parse_weyl_expr("x3", 2, kZZ), AlgebraError);
    CHECK_THROWS_WITH_AS(io::parse_weyl_expr("x3", 2, kZZ), doctest::Contains("IndexOutOfRange"),
                         AlgebraError);
    CHECK_THROWS_AS(io::parse_weyl_expr("x1 +", 1, kZZ), AlgebraError);
    CHECK_THROWS_AS(io::parse_weyl_expr("x1 ++ y1", 1, kZZ), AlgebraError);
    CHECK_THROWS_AS(io::parse_weyl_expr("(x1", 1, kZZ), AlgebraError);
    CHECK_THROWS_AS(io::parse_weyl_expr("t*x1", 1, kZZ), AlgebraError);
    CHECK_THROWS_WITH_AS(io::parse_weyl_expr("t*x1", 1, kZZ), doctest::Contains("LiteralNotInRing"),
                         AlgebraError);
    CHECK_THROWS_AS(io::parse_weyl_expr("x1/y1", 1, kZZ), AlgebraError); // non-scalar divisor
    CHECK_THROWS_AS(io::parse_weyl_expr("z1", 1, kZZ), AlgebraError);

    SUBCASE("t-fractions") {
        auto f5t = RingDescriptor::rational_functions(5);
        auto e = io::parse_weyl_expr("(t^2+1)/(t)*x1", 1, f5t);
        CHECK(e == Scalar::rational(FpPoly(5, {1, 0, 1}), FpPoly::t(5)) *
                       WeylElement::generator(1, f5t, 1));
        CHECK(io::parse_weyl_expr("1/t", 1, f5t) ==
              WeylElement::constant(1, Scalar::t(5).inv()));
    }
}

TEST_CASE("printing is canonical and round-trips") {
    std::mt19937_64 rng(91);
    for (RingDescriptor ring :
         {kZZ, RingDescriptor::prime_field(7), RingDescriptor::rational_functions(5)}) {
        for (int i = 0; i < 30; ++i) {
            unsigned n = 1 + i % 2;
            auto e = random_weyl(rng, n, ring, 5, 4);
            CHECK(io::parse_weyl_expr(io::to_string(e), n, ring) == e);

            auto q = random_poly(rng, 2 * n, ring, 4, 3);
            CHECK(io::parse_poly_expr(io::to_string(q), 2 * n, ring) == q);
        }
    }

    SUBCASE("equal elements print identically") {
        auto a = io::parse_weyl_expr("y1*x1 + x1^2", 1, kZZ);
        auto b = io::parse_weyl_expr("x1^2 + x1*y1 + 1", 1, kZZ);
        REQUIRE(a == b);
        CHECK(io::to_string(a) == io::to_string(b));
        CHECK(io::to_string(a) == "x1^2 + x1*y1 + 1");
    }
    SUBCASE("zero and signs") {
        CHECK(io::to_string(WeylElement::zero(1, kZZ)) == "0");
        CHECK(io::to_string(io::parse_weyl_expr("x1 - 3*y1 - 1", 1, kZZ)) == "x1 - 3*y1 - 1");
    }
}

TEST_CASE("morphism documents") {
    std::string doc = R"({
        "n": 1,
        "ring": {"kind": "prime_field", "p": 7},
        "images": ["x1", "y1+x1^2"]
    })";
    auto f = io::parse_morphism(doc);
    CHECK(f.pairs() == 1);
    CHECK(f.ring() == RingDescriptor::prime_field(7));
    CHECK(f.images()[1] == io::parse_weyl_expr("y1+x1^2", 1, f.ring()));

    std::string bad = R"({
        "n": 1,
        "ring": {"kind": "prime_field", "p": 7},
        "images": ["x1", "y1+y1^2"]
    })";
    CHECK_THROWS_AS(io::parse_morphism(bad), AlgebraError);
    CHECK_THROWS_WITH_AS(io::parse_morphism(bad), doctest::Contains("RelationViolation"), AlgebraError);

    SUBCASE("word-only documents derive their images") {
        std::string wdoc = R"({
            "n": 1,
            "ring": {"kind": "integers"},
            "word": [{"type": "elementary", "potential": "x1^3"},
                     {"type": "linear", "matrix": [[0, 1], [-1, 0]]}]
        })";
        auto g = io::parse_morphism(wdoc);
        REQUIRE(g.provenance().has_value());
        CHECK(g.provenance()->size() == 2);
        CHECK(g == morphism_from_word(1, kZZ, *g.provenance()));
    }

    SUBCASE("word and images must agree") {
        std::string mixed = R"({
            "n": 1,
            "ring": {"kind": "integers"},
            "images": ["x1", "y1"],
            "word": [{"type": "elementary", "potential": "x1^3"}]
        })";
        CHECK_THROWS_AS(io::parse_morphism(mixed), AlgebraError);
    }

    SUBCASE("emit/parse round trip") {
        auto g = random_tame(5, 2, 3, 3, 2);
        auto h = io::parse_morphism(io::emit_morphism(g));
        CHECK(g == h);
        REQUIRE(h.provenance().has_value());
        CHECK(*h.provenance() == *g.provenance());
        // canonical: emitting again reproduces the document byte for byte
        CHECK(io::emit_morphism(g) == io::emit_morphism(h));
    }

    SUBCASE("malformed documents") {
        CHECK_THROWS_AS(io::parse_morphism("{"), AlgebraError);
        CHECK_THROWS_AS(io::parse_morphism(R"({"n": 1, "ring": {"kind": "field"}})"), AlgebraError);
        CHECK_THROWS_AS(io::parse_morphism(R"({"n": 1, "ring": {"kind": "integers"}})"), AlgebraError);
    }
}

TEST_CASE("word documents") {
    auto f = random_tame(11, 2, 4, 3, 2);
    std::string doc = io::emit_word_document(2, kZZ, *f.provenance());
    unsigned n = 0;
    RingDescriptor ring = RingDescriptor::prime_field(5);
    TameWord w = io::parse_word_document(doc, n, ring);
    CHECK(n == 2);
    CHECK(ring == kZZ);
    CHECK(w == *f.provenance());
}

TEST_CASE("report emission is deterministic") {
    auto gf7 = RingDescriptor::prime_field(7);
    auto rep = verify_symplectic(SymplectoMap::identity(1, gf7));
    std::string a = io::emit_report(rep);
    std::string b = io::emit_report(rep);
    CHECK(a == b);
    CHECK(a.find("\"check\"") != std::string::npos);
    CHECK(a.find("\"pass\"") != std::string::npos);
    CHECK(a.find("\"witnesses\"") != std::string::npos);
    CHECK(a.find("\"timing_ms\"") != std::string::npos);

    TameWord w{ElementaryGen{io::parse_poly_expr("x1^2", 1, kZZ, 'x')}};
    auto ir = independence_report(1, w, {5, 7});
    std::string s1 = io::emit_report(ir);
    CHECK(s1 == io::emit_report(ir));
    CHECK(s1.find("\"crt\"") != std::string::npos);
}
