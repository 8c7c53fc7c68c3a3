#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "weylbkk/errors.hpp"

namespace weylbkk {

bool is_prime(long n);
long next_prime(long n);                     // smallest prime > n
std::vector<long> primes_above(long n, int count);

/// Tag identifying one of the three supported coefficient rings.
struct RingDescriptor {
    enum class Kind { Integers, PrimeField, RationalFunctions };

    Kind kind = Kind::Integers;
    long p = 0; // prime modulus, 0 for Integers

    static RingDescriptor integers() { return {Kind::Integers, 0}; }
    static RingDescriptor prime_field(long p);
    static RingDescriptor rational_functions(long p);

    bool operator==(const RingDescriptor&) const = default;

    long characteristic() const { return kind == Kind::Integers ? 0 : p; }
    bool positive_characteristic() const { return kind != Kind::Integers; }

    std::string to_string() const;
};

/// Dense univariate polynomial over F_p, coefficients in [0,p). Zero is the
/// empty coefficient vector; otherwise the leading coefficient is nonzero.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(long p, std::vector<long> coeffs); // normalizes

    static FpPoly zero(long p) { return FpPoly(p, {}); }
    static FpPoly constant(long p, long c) { return FpPoly(p, {c}); }
    static FpPoly t(long p) { return FpPoly(p, {0, 1}); }

    long p() const { return p_; }
    const std::vector<long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    long leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    bool operator==(const FpPoly&) const = default;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    FpPoly operator-() const;

    // Quotient/remainder by a nonzero divisor.
    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
    static FpPoly gcd(FpPoly a, FpPoly b); // monic gcd
    FpPoly monic() const;

    FpPoly substitute_t_power(long k) const; // t -> t^k
    // Unique p-th root when all exponents are multiples of p.
    std::pair<bool, FpPoly> pth_root() const;

    std::string to_string() const; // e.g. "2*t^3+t+4"

private:
    long p_ = 0;
    std::vector<long> c_;
};

/// Reduced fraction of FpPolys with monic nonzero denominator.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(FpPoly num, FpPoly den); // reduces to canonical form

    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    long p() const { return num_.p(); }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFunc&) const = default;

private:
    FpPoly num_, den_;
};

/// Exact element of Z, F_p, or F_p(t), tagged with its ring. Immutable value
/// type; mixed-ring arithmetic is rejected with RingMismatch.
class Scalar {
public:
    static Scalar integer(long v);
    static Scalar integer(mpz_class v);
    static Scalar residue(long v, long p); // canonicalizes into [0,p)
    static Scalar rational(RatFunc f);
    static Scalar rational(FpPoly num, FpPoly den);

    static Scalar zero(const RingDescriptor& ring) { return from_int(ring, 0); }
    static Scalar one(const RingDescriptor& ring) { return from_int(ring, 1); }
    static Scalar from_int(const RingDescriptor& ring, long v);
    static Scalar t(long p) { return rational(FpPoly::t(p), FpPoly::constant(p, 1)); }

    const RingDescriptor& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    const mpz_class& integer_value() const;  // Integers only
    long residue_value() const;              // PrimeField only
    const RatFunc& rational_value() const;   // RationalFunctions only

    bool operator==(const Scalar&) const = default;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    Scalar inv() const;

    Scalar frobenius() const;         // a -> a^p, characteristic p only
    Scalar inverse_frobenius() const; // unique p-th root, or NotInFrobeniusImage

    std::string to_string() const;

private:
    Scalar(RingDescriptor ring, std::variant<mpz_class, long, RatFunc> v)
        : ring_(ring), v_(std::move(v)) {}

    RingDescriptor ring_;
    std::variant<mpz_class, long, RatFunc> v_;
};

Scalar reduce_mod_p(const Scalar& a, long p);   // Z -> F_p
Scalar lift_to_integers(const Scalar& a);       // F_p -> Z, representative in [0,p)

/// Recovers the unique integer in the symmetric range (-M/2, M/2], M = prod p_k,
/// from residues modulo pairwise distinct primes.
Scalar crt_reconstruct(const std::vector<Scalar>& residues);

} // namespace weylbkk
