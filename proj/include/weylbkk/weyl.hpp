#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "weylbkk/scalars.hpp"

namespace weylbkk {

/// Exponent vector (i_1,...,i_2n) for the normal-ordered basis monomial
/// zeta^I = x_1^{i_1}...x_n^{i_n} y_1^{i_{n+1}}...y_n^{i_{2n}}.
using MultiIndex = std::vector<unsigned>;

inline unsigned total(const MultiIndex& I) {
    return std::accumulate(I.begin(), I.end(), 0u);
}

/// Graded lexicographic order; the canonical term order everywhere.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        unsigned da = total(a), db = total(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

using TermMap = std::map<MultiIndex, Scalar, GrlexLess>;

/// omega_{ij} = delta_{i,n+j} - delta_{i+n,j} for 1-based generator indices.
int symplectic_form(unsigned n, unsigned i, unsigned j);

/// Element of the n-th Weyl algebra over Z, F_p or F_p(t), stored as a sparse
/// map from normal-ordered basis monomials to nonzero coefficients.
class WeylElement {
public:
    WeylElement(unsigned n, RingDescriptor ring);

    static WeylElement zero(unsigned n, RingDescriptor ring) { return {n, ring}; }
    static WeylElement one(unsigned n, RingDescriptor ring);
    static WeylElement constant(unsigned n, const Scalar& c);
    /// gen is 1-based: 1..n are x_1..x_n, n+1..2n are y_1..y_n.
    static WeylElement generator(unsigned n, RingDescriptor ring, unsigned gen);
    static WeylElement monomial(unsigned n, const Scalar& c, const MultiIndex& I);

    unsigned pairs() const { return n_; }
    unsigned nvars() const { return 2 * n_; }
    const RingDescriptor& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coeff(const MultiIndex& I) const;

    void add_term(const MultiIndex& I, const Scalar& c);

    bool operator==(const WeylElement&) const = default;

    friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
    WeylElement operator-() const;
    friend WeylElement operator*(const Scalar& c, const WeylElement& a);
    /// Normal-ordered product via the closed-form structure constants.
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

private:
    unsigned n_;
    RingDescriptor ring_;
    TermMap terms_;
};

/// Independent oracle for the product: rewrites y_k x_k -> x_k y_k + 1 term by
/// term until every word is normal-ordered. Slow; used to cross-check mul.
WeylElement mul_naive(const WeylElement& a, const WeylElement& b);

WeylElement commutator(const WeylElement& a, const WeylElement& b);
WeylElement ad_pow(const WeylElement& x, const WeylElement& y, unsigned d);
WeylElement pow(const WeylElement& a, unsigned long m);

/// Max |I| over stored terms; nullopt is the degree of the zero element.
std::optional<int> total_degree(const WeylElement& a);

WeylElement reduce_mod_p(const WeylElement& a, long p);
WeylElement lift_to_integers(const WeylElement& a);

/// Exact division of an integer element by an integer; every coefficient must
/// be divisible, otherwise NotDivisibleByP.
WeylElement divide_exact(const WeylElement& a, long d);

} // namespace weylbkk
