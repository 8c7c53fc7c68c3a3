#pragma once

// Shared random generators for property tests. Everything is seeded
// explicitly; tests must be reproducible run to run.

#include <random>

#include "weylbkk/center.hpp"
#include "weylbkk/morphisms.hpp"

namespace testsupport {

using namespace weylbkk;

inline Scalar random_scalar(std::mt19937_64& rng, const RingDescriptor& ring) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers:
        return Scalar::integer(static_cast<long>(rng() % 19) - 9);
    case RingDescriptor::Kind::PrimeField:
        return Scalar::residue(static_cast<long>(rng() % ring.p), ring.p);
    case RingDescriptor::Kind::RationalFunctions: {
        std::vector<long> num(1 + rng() % 3), den(1 + rng() % 2);
        for (auto& c : num) c = static_cast<long>(rng() % ring.p);
        for (auto& c : den) c = static_cast<long>(rng() % ring.p);
        FpPoly d(ring.p, den);
        if (d.is_zero()) d = FpPoly::constant(ring.p, 1);
        return Scalar::rational(FpPoly(ring.p, num), d);
    }
    }
    fail(Errc::InvalidArgument, "bad ring");
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, const RingDescriptor& ring) {
    for (;;) {
        Scalar s = random_scalar(rng, ring);
        if (!s.is_zero()) return s;
    }
}

inline WeylElement random_weyl(std::mt19937_64& rng, unsigned n, const RingDescriptor& ring,
                               unsigned max_degree, unsigned max_terms) {
    WeylElement e(n, ring);
    unsigned terms = 1 + rng() % max_terms;
    for (unsigned t = 0; t < terms; ++t) {
        MultiIndex I(2 * n, 0);
        unsigned d = rng() % (max_degree + 1);
        for (unsigned r = 0; r < d; ++r) ++I[rng() % (2 * n)];
        e.add_term(I, random_scalar(rng, ring));
    }
    return e;
}

inline WeylElement random_nonzero_weyl(std::mt19937_64& rng, unsigned n, const RingDescriptor& ring,
                                       unsigned max_degree, unsigned max_terms) {
    for (;;) {
        WeylElement e = random_weyl(rng, n, ring, max_degree, max_terms);
        if (!e.is_zero()) return e;
    }
}

inline Poly random_poly(std::mt19937_64& rng, unsigned nvars, const RingDescriptor& ring,
                        unsigned max_degree, unsigned max_terms) {
    Poly q(nvars, ring);
    unsigned terms = 1 + rng() % max_terms;
    for (unsigned t = 0; t < terms; ++t) {
        MultiIndex I(nvars, 0);
        unsigned d = rng() % (max_degree + 1);
        for (unsigned r = 0; r < d; ++r) ++I[rng() % nvars];
        q.add_term(I, random_scalar(rng, ring));
    }
    return q;
}

/// Random central polynomial in xi-coordinates (2n variables).
inline Poly random_center_poly(std::mt19937_64& rng, unsigned n, const RingDescriptor& ring,
                               unsigned max_degree, unsigned max_terms) {
    return random_poly(rng, 2 * n, ring, max_degree, max_terms);
}

} // namespace testsupport
