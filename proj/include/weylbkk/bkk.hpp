#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylbkk/morphisms.hpp"

namespace weylbkk {

/// Uniform result of a verification pass: named check, parameters, verdict,
/// human-readable witnesses for failures.
struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    bool precondition_ok = true;
    std::vector<std::string> witnesses;
    double timing_ms = 0.0;
};

/// Center restriction f -> f^c: xi_i -> extract(f(zeta_i)^p). Requires a
/// valid morphism in characteristic p; the images of an automorphism land in
/// the center, anything else is an internal fault (NotCentral).
SymplectoMap center_restriction(const WeylMorphism& f);

/// Coefficientwise inverse Frobenius (the finite-p untwist).
SymplectoMap untwist(const SymplectoMap& s);

struct PhiResult {
    SymplectoMap map;
    long p = 0;
    int morphism_degree = 0;
    bool precondition_ok = true;  // p >= Deg f + 2
    bool inverse_degree_known = true;
};

/// The finite-prime shadow of the center-restriction morphism:
/// untwist(center_restriction(f)), with a warning flag when p < Deg f + 2.
PhiResult phi_p(const WeylMorphism& f);

/// Checks {s(xi_i), s(xi_j)} = omega_ij for all i < j. Uses the
/// lift-commutator bracket over F_p and the partial-derivative bracket over
/// F_p(t), where no integer lift exists.
CheckReport verify_symplectic(const SymplectoMap& s);

/// Top-degree comparison: the dominant part of f^c(xi_i) must equal the
/// dominant part of f(zeta_i), read commutatively, with coefficients raised
/// to the p-th power. Requires odd p >= Deg f + 2.
CheckReport dominant_check(const WeylMorphism& f);

/// Every coefficient of f^c must have a p-th root (lie in F_p(t^p) over the
/// rational function field). Requires p >= Deg f + 2.
CheckReport frobenius_poly_check(const WeylMorphism& f);

/// Coefficient scan behind frobenius_poly_check, applicable to any map.
CheckReport frobenius_image_check(const SymplectoMap& s);

/// phi_p(f o g) == phi_p(f) o phi_p(g), exact equality of polynomial maps.
CheckReport homomorphism_check(const WeylMorphism& f, const WeylMorphism& g);

/// Experimental: compares the next-to-top homogeneous part of the untwisted
/// center restriction with the same part of f's images read commutatively.
/// Observations land in the witnesses; the report never fails.
CheckReport subdominant_report(const WeylMorphism& f);

struct PrimeResult {
    long p = 0;
    bool precondition_ok = true; // p >= degree bound + 2
    bool match = false;          // phi_p(f mod p) == tau(word) mod p
    SymplectoMap computed;
    SymplectoMap expected;
};

/// Multi-prime independence data for a tame word over Z: per-prime
/// comparison against the classical image tau(word), plus CRT reconstruction
/// of the integer coefficients across the prime set.
struct IndependenceReport {
    unsigned n = 0;
    TameWord word;
    int degree_bound = 0;
    SymplectoMap expected_integer; // tau(word) over Z
    std::vector<PrimeResult> per_prime;
    SymplectoMap crt_reconstructed;    // coefficientwise CRT over the full prime set
    bool crt_matches_expected = false; // crt_reconstructed equals tau's coefficients
    bool pairwise_consistent = false;  // every prime pair reconstructs the same map
    double timing_ms = 0.0;
    bool all_preconditions_ok() const;
    bool all_match() const; // per-prime matches and both CRT flags
};

IndependenceReport independence_report(unsigned n, const TameWord& word, const std::vector<long>& primes,
                                       unsigned threads = 1);

/// Smallest primes p > bound, p >= bound+... used for default prime choices.
std::vector<long> default_primes(int degree_bound, int count);

} // namespace weylbkk
