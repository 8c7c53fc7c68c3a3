#include "weylbkk/center.hpp"

namespace weylbkk {

namespace {
long require_char_p(const RingDescriptor& ring, const char* what) {
    if (!ring.positive_characteristic())
        fail(Errc::NotPositiveCharacteristic, std::string(what) + " needs characteristic p");
    return ring.p;
}
} // namespace

bool is_central(const WeylElement& a) {
    long p = require_char_p(a.ring(), "centrality test");
    for (const auto& [I, c] : a.terms())
        for (unsigned e : I)
            if (e % p != 0) return false;
    return true;
}

CenterPoly extract_center(const WeylElement& a) {
    long p = require_char_p(a.ring(), "center extraction");
    CenterPoly r(a.nvars(), a.ring());
    for (const auto& [I, c] : a.terms()) {
        MultiIndex K(I.size());
        for (size_t v = 0; v < I.size(); ++v) {
            if (I[v] % p != 0)
                fail(Errc::NotCentral, "exponent " + std::to_string(I[v]) + " not divisible by p");
            K[v] = I[v] / p;
        }
        r.add_term(K, c);
    }
    return r;
}

WeylElement embed_center(const CenterPoly& c) {
    long p = require_char_p(c.ring(), "center embedding");
    if (c.nvars() % 2 != 0) fail(Errc::InvalidArgument, "center polynomial needs 2n variables");
    WeylElement r(c.nvars() / 2, c.ring());
    for (const auto& [K, v] : c.terms()) {
        MultiIndex I(K.size());
        for (size_t i = 0; i < K.size(); ++i) I[i] = K[i] * p;
        r.add_term(I, v);
    }
    return r;
}

CenterPoly poisson_bracket(const CenterPoly& a, const CenterPoly& b) {
    if (a.nvars() != b.nvars() || a.ring() != b.ring())
        fail(Errc::Mismatch, "bracket operands with different variables or ring");
    long p = a.ring().characteristic();
    if (a.ring().kind != RingDescriptor::Kind::PrimeField) {
        if (p == 0)
            fail(Errc::NotPositiveCharacteristic, "the lift-commutator bracket needs characteristic p");
        fail(Errc::InvalidArgument,
             "the lift-commutator bracket needs F_p coefficients; use classical_bracket over F_p(t)");
    }

    WeylElement a0 = lift_to_integers(embed_center(a));
    WeylElement b0 = lift_to_integers(embed_center(b));
    WeylElement comm = commutator(a0, b0); // over Z
    WeylElement divided = divide_exact(comm, p);
    WeylElement reduced = reduce_mod_p(divided, p);
    if (!is_central(reduced))
        fail(Errc::NotCentralResult, "bracket value escaped the center (internal fault)");
    return -extract_center(reduced);
}

CenterPoly classical_bracket(const CenterPoly& a, const CenterPoly& b) {
    if (a.nvars() != b.nvars() || a.ring() != b.ring())
        fail(Errc::Mismatch, "bracket operands with different variables or ring");
    if (a.nvars() % 2 != 0) fail(Errc::InvalidArgument, "bracket needs 2n variables");
    unsigned n = a.nvars() / 2;
    CenterPoly r(a.nvars(), a.ring());
    for (unsigned k = 1; k <= n; ++k) {
        r = r + derivative(a, n + k) * derivative(b, k);
        r = r - derivative(a, k) * derivative(b, n + k);
    }
    return r;
}

} // namespace weylbkk
