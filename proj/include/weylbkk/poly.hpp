#pragma once

#include <optional>

#include "weylbkk/weyl.hpp"

namespace weylbkk {

/// Sparse commutative polynomial over a scalar ring. Used both for center
/// polynomials in xi_1..xi_2n and for the potentials F(x_1..x_n) of
/// elementary automorphisms.
class Poly {
public:
    Poly(unsigned nvars, RingDescriptor ring);

    static Poly zero(unsigned nvars, RingDescriptor ring) { return {nvars, ring}; }
    static Poly one(unsigned nvars, RingDescriptor ring);
    static Poly constant(unsigned nvars, const Scalar& c);
    static Poly variable(unsigned nvars, RingDescriptor ring, unsigned var); // 1-based
    static Poly monomial(unsigned nvars, const Scalar& c, const MultiIndex& I);

    unsigned nvars() const { return nvars_; }
    const RingDescriptor& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar coeff(const MultiIndex& I) const;

    void add_term(const MultiIndex& I, const Scalar& c);

    bool operator==(const Poly&) const = default;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator*(const Scalar& c, const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    unsigned nvars_;
    RingDescriptor ring_;
    TermMap terms_;
};

Poly pow(const Poly& a, unsigned long m);
std::optional<int> total_degree(const Poly& a);
Poly derivative(const Poly& a, unsigned var); // 1-based
Poly reduce_mod_p(const Poly& a, long p);
Poly lift_to_integers(const Poly& a);

/// Substitutes images[v] for variable v+1; images live in a common variable
/// count and ring, which the result adopts.
Poly substitute(const Poly& a, const std::vector<Poly>& images);

/// Reinterprets a polynomial in a wider variable set, mapping variable v to
/// variable v + offset.
Poly widen_vars(const Poly& a, unsigned nvars, unsigned offset = 0);

/// Top homogeneous part (terms of maximal total degree).
Poly top_homogeneous(const Poly& a);

/// Coefficientwise Frobenius a -> a^p.
Poly frobenius_coeffs(const Poly& a);

std::optional<int> max_coeff_abs(const Poly& a); // Z coefficients; largest |c| as long if it fits

} // namespace weylbkk
