#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "weylbkk/center.hpp"
#include "weylbkk/poly.hpp"
#include "weylbkk/weyl.hpp"

namespace weylbkk {

/// Small dense matrix of scalars; just enough for symplectic bookkeeping.
class Mat {
public:
    Mat(unsigned rows, unsigned cols, const Scalar& fill);
    static Mat identity(unsigned n, RingDescriptor ring);
    /// The standard symplectic matrix J with J_{ij} = omega_{ij}.
    static Mat symplectic_j(unsigned n, RingDescriptor ring);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const Scalar& at(unsigned i, unsigned j) const { return a_[i * cols_ + j]; }
    Scalar& at(unsigned i, unsigned j) { return a_[i * cols_ + j]; }
    const RingDescriptor& ring() const { return a_[0].ring(); }

    bool operator==(const Mat&) const = default;

    friend Mat operator*(const Mat& a, const Mat& b);
    Mat transpose() const;
    Mat operator-() const;

private:
    unsigned rows_, cols_;
    std::vector<Scalar> a_;
};

bool is_symplectic(const Mat& m);          // M^T J M == J
Mat symplectic_inverse(const Mat& m);      // M^-1 = -J M^T J

/// Elementary tame generator: x_i -> x_i, y_i -> y_i + dF/dx_i for a
/// constant-free potential F(x_1..x_n).
struct ElementaryGen {
    Poly potential; // nvars = n
    bool operator==(const ElementaryGen&) const = default;
};

/// Linear symplectic change of variables zeta_i -> sum_j M_{ij} zeta_j.
struct LinearGen {
    Mat matrix; // 2n x 2n, M^T J M = J
    bool operator==(const LinearGen&) const = default;
};

using TameGenerator = std::variant<ElementaryGen, LinearGen>;
using TameWord = std::vector<TameGenerator>;

/// Weyl algebra endomorphism given by the 2n generator images. Constructed
/// through validate()/the generator builders, so the commutation relations
/// [f(zeta_i), f(zeta_j)] = omega_{ij} always hold.
class WeylMorphism {
public:
    static WeylMorphism validate(std::vector<WeylElement> images,
                                 std::optional<std::vector<WeylElement>> inverse_images = std::nullopt,
                                 std::optional<TameWord> provenance = std::nullopt);
    static WeylMorphism identity(unsigned n, RingDescriptor ring);

    unsigned pairs() const { return n_; }
    const RingDescriptor& ring() const { return ring_; }
    const std::vector<WeylElement>& images() const { return images_; }
    const std::optional<std::vector<WeylElement>>& inverse_images() const { return inverse_images_; }
    const std::optional<TameWord>& provenance() const { return provenance_; }

    bool operator==(const WeylMorphism& o) const {
        return n_ == o.n_ && ring_ == o.ring_ && images_ == o.images_;
    }

private:
    WeylMorphism(unsigned n, RingDescriptor ring) : n_(n), ring_(ring) {}
    friend WeylMorphism compose(const WeylMorphism&, const WeylMorphism&);

    unsigned n_;
    RingDescriptor ring_;
    std::vector<WeylElement> images_;
    std::optional<std::vector<WeylElement>> inverse_images_;
    std::optional<TameWord> provenance_;
};

WeylElement apply(const WeylMorphism& f, const WeylElement& w);
/// f o g: first g, then f. Provenance words concatenate; inverse images
/// compose in reverse when both operands carry them.
WeylMorphism compose(const WeylMorphism& f, const WeylMorphism& g);
WeylMorphism elementary(unsigned n, const Poly& potential);
WeylMorphism linear_symplectic(const Mat& m);
/// Inverse of a provenance-carrying morphism (each generator inverted, word
/// reversed).
WeylMorphism inverse_from_provenance(const WeylMorphism& f);

/// Max total degree over images and inverse images. The identity has degree 1.
int degree(const WeylMorphism& f);
bool inverse_degree_known(const WeylMorphism& f);

/// Coefficientwise reduction of an integer morphism; images, inverse images
/// and the provenance word all reduce.
WeylMorphism reduce_mod_p(const WeylMorphism& f, long p);

/// Polynomial map xi_i -> P_i(xi) on the center coordinates.
struct SymplectoMap {
    unsigned n = 0;
    RingDescriptor ring;
    std::vector<CenterPoly> images; // 2n entries in 2n variables

    static SymplectoMap identity(unsigned n, RingDescriptor ring);
    bool operator==(const SymplectoMap&) const = default;
};

SymplectoMap compose(const SymplectoMap& s, const SymplectoMap& r); // s o r
SymplectoMap reduce_mod_p(const SymplectoMap& s, long p);
int degree(const SymplectoMap& s);

/// The same-coefficient classical image tau(word): Elementary(F) acts as
/// xi_{n+i} -> xi_{n+i} + dF/dx_i(xi_1..xi_n), Linear(M) as xi -> M xi.
SymplectoMap classical_symplecto(unsigned n, const RingDescriptor& ring, const TameWord& word);

/// Builds the morphism of a tame word by composing its generators
/// left to right (the rightmost generator acts first).
WeylMorphism morphism_from_word(unsigned n, const RingDescriptor& ring, const TameWord& word);

TameWord reduce_word_mod_p(const TameWord& word, long p);
TameWord inverse_word(const TameWord& word);
int word_pairs(const TameWord& word); // n recovered from generator shapes

/// Deterministic generator of valid tame automorphisms over Z: alternates
/// elementary and linear symplectic generators with small integer
/// coefficients, recording provenance and inverse images.
WeylMorphism random_tame(unsigned long seed, unsigned n, unsigned word_length, unsigned degree_bound,
                         long coeff_bound);

} // namespace weylbkk
