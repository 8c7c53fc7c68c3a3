#include "weylbkk/poly.hpp"

namespace weylbkk {

Poly::Poly(unsigned nvars, RingDescriptor ring) : nvars_(nvars), ring_(ring) {
    if (nvars == 0) fail(Errc::InvalidArgument, "polynomial ring needs at least one variable");
}

Poly Poly::one(unsigned nvars, RingDescriptor ring) { return constant(nvars, Scalar::one(ring)); }

Poly Poly::constant(unsigned nvars, const Scalar& c) {
    Poly p(nvars, c.ring());
    p.add_term(MultiIndex(nvars, 0), c);
    return p;
}

Poly Poly::variable(unsigned nvars, RingDescriptor ring, unsigned var) {
    if (var < 1 || var > nvars)
        fail(Errc::IndexOutOfRange, "variable index " + std::to_string(var) + " of " + std::to_string(nvars));
    Poly p(nvars, ring);
    MultiIndex I(nvars, 0);
    I[var - 1] = 1;
    p.add_term(I, Scalar::one(ring));
    return p;
}

Poly Poly::monomial(unsigned nvars, const Scalar& c, const MultiIndex& I) {
    Poly p(nvars, c.ring());
    p.add_term(I, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Scalar Poly::coeff(const MultiIndex& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void Poly::add_term(const MultiIndex& I, const Scalar& c) {
    if (I.size() != nvars_) fail(Errc::InvalidArgument, "multi-index length mismatch");
    if (c.ring() != ring_) fail(Errc::RingMismatch, "coefficient ring differs from polynomial ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(I, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {
void require_compatible(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars() || a.ring() != b.ring())
        fail(Errc::Mismatch, "polynomials with different variable count or ring");
}
} // namespace

Poly operator+(const Poly& a, const Poly& b) {
    require_compatible(a, b);
    Poly r = a;
    for (const auto& [I, c] : b.terms()) r.add_term(I, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    Poly r(nvars_, ring_);
    for (const auto& [I, c] : terms_) r.terms_.emplace(I, -c);
    return r;
}

Poly operator*(const Scalar& c, const Poly& a) {
    if (c.ring() != a.ring()) fail(Errc::RingMismatch, "scalar ring differs from polynomial ring");
    Poly r(a.nvars(), a.ring());
    if (c.is_zero()) return r;
    for (const auto& [I, v] : a.terms()) r.add_term(I, c * v);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_compatible(a, b);
    Poly r(a.nvars(), a.ring());
    MultiIndex K(a.nvars());
    for (const auto& [I, ca] : a.terms()) {
        for (const auto& [J, cb] : b.terms()) {
            for (unsigned v = 0; v < a.nvars(); ++v) K[v] = I[v] + J[v];
            r.add_term(K, ca * cb);
        }
    }
    return r;
}

Poly pow(const Poly& a, unsigned long m) {
    Poly result = Poly::one(a.nvars(), a.ring());
    if (m == 0) return result;
    if (a.terms().size() <= 64) { // sparse base: see weyl.cpp
        result = a;
        for (unsigned long k = 1; k < m; ++k) result = result * a;
        return result;
    }
    Poly base = a;
    while (m > 0) {
        if (m & 1) result = result * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return result;
}

std::optional<int> total_degree(const Poly& a) {
    if (a.is_zero()) return std::nullopt;
    return static_cast<int>(total(a.terms().rbegin()->first));
}

Poly derivative(const Poly& a, unsigned var) {
    if (var < 1 || var > a.nvars()) fail(Errc::IndexOutOfRange, "derivative variable out of range");
    Poly r(a.nvars(), a.ring());
    for (const auto& [I, c] : a.terms()) {
        unsigned e = I[var - 1];
        if (e == 0) continue;
        MultiIndex J = I;
        --J[var - 1];
        r.add_term(J, Scalar::from_int(a.ring(), static_cast<long>(e)) * c);
    }
    return r;
}

Poly reduce_mod_p(const Poly& a, long p) {
    Poly r(a.nvars(), RingDescriptor::prime_field(p));
    for (const auto& [I, c] : a.terms()) r.add_term(I, reduce_mod_p(c, p));
    return r;
}

Poly lift_to_integers(const Poly& a) {
    Poly r(a.nvars(), RingDescriptor::integers());
    for (const auto& [I, c] : a.terms()) r.add_term(I, lift_to_integers(c));
    return r;
}

Poly substitute(const Poly& a, const std::vector<Poly>& images) {
    if (images.size() != a.nvars()) fail(Errc::Mismatch, "need one image per variable");
    const unsigned nv = images[0].nvars();
    const RingDescriptor ring = images[0].ring();
    for (const auto& im : images)
        if (im.nvars() != nv || im.ring() != ring) fail(Errc::Mismatch, "images disagree on variables or ring");
    if (a.ring() != ring) fail(Errc::RingMismatch, "polynomial and images in different rings");

    Poly r(nv, ring);
    for (const auto& [I, c] : a.terms()) {
        Poly term = Poly::constant(nv, c);
        for (unsigned v = 0; v < a.nvars(); ++v)
            if (I[v] > 0) term = term * pow(images[v], I[v]);
        r = r + term;
    }
    return r;
}

Poly widen_vars(const Poly& a, unsigned nvars, unsigned offset) {
    if (a.nvars() + offset > nvars) fail(Errc::InvalidArgument, "widen_vars target too small");
    Poly r(nvars, a.ring());
    for (const auto& [I, c] : a.terms()) {
        MultiIndex J(nvars, 0);
        for (unsigned v = 0; v < a.nvars(); ++v) J[v + offset] = I[v];
        r.add_term(J, c);
    }
    return r;
}

Poly top_homogeneous(const Poly& a) {
    Poly r(a.nvars(), a.ring());
    if (a.is_zero()) return r;
    unsigned d = total(a.terms().rbegin()->first);
    for (auto it = a.terms().rbegin(); it != a.terms().rend() && total(it->first) == d; ++it)
        r.add_term(it->first, it->second);
    return r;
}

Poly frobenius_coeffs(const Poly& a) {
    Poly r(a.nvars(), a.ring());
    for (const auto& [I, c] : a.terms()) r.add_term(I, c.frobenius());
    return r;
}

std::optional<int> max_coeff_abs(const Poly& a) {
    if (a.ring().kind != RingDescriptor::Kind::Integers)
        fail(Errc::RingMismatch, "max_coeff_abs needs integer coefficients");
    mpz_class m = 0;
    for (const auto& [I, c] : a.terms()) {
        mpz_class v = abs(c.integer_value());
        if (v > m) m = v;
    }
    if (!m.fits_sint_p()) return std::nullopt;
    return static_cast<int>(m.get_si());
}

} // namespace weylbkk
