#include "weylbkk/morphisms.hpp"

#include <random>

namespace weylbkk {

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(unsigned rows, unsigned cols, const Scalar& fill) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) fail(Errc::InvalidArgument, "empty matrix");
    a_.assign(static_cast<size_t>(rows) * cols, fill);
}

Mat Mat::identity(unsigned n, RingDescriptor ring) {
    Mat m(n, n, Scalar::zero(ring));
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
}

Mat Mat::symplectic_j(unsigned n, RingDescriptor ring) {
    Mat m(2 * n, 2 * n, Scalar::zero(ring));
    for (unsigned i = 1; i <= 2 * n; ++i)
        for (unsigned j = 1; j <= 2 * n; ++j) {
            int w = symplectic_form(n, i, j);
            if (w != 0) m.at(i - 1, j - 1) = Scalar::from_int(ring, w);
        }
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) fail(Errc::Mismatch, "matrix shape mismatch");
    Mat r(a.rows(), b.cols(), Scalar::zero(a.ring()));
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (unsigned j = 0; j < b.cols(); ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, a_[0]);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
}

bool is_symplectic(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
    unsigned n = m.rows() / 2;
    Mat j = Mat::symplectic_j(n, m.ring());
    return m.transpose() * j * m == j;
}

Mat symplectic_inverse(const Mat& m) {
    if (!is_symplectic(m)) fail(Errc::NotSymplectic, "matrix is not symplectic");
    unsigned n = m.rows() / 2;
    Mat j = Mat::symplectic_j(n, m.ring());
    return (-j) * m.transpose() * j; // J^-1 = -J
}

// ---------------------------------------------------------------------------
// WeylMorphism

namespace {

WeylElement apply_images(const std::vector<WeylElement>& images, const WeylElement& w) {
    const unsigned n = w.pairs();
    WeylElement out(n, w.ring());
    // lazily extended power tables, one per generator
    std::vector<std::vector<WeylElement>> powers(2 * n);
    auto power = [&](unsigned g, unsigned e) -> const WeylElement& {
        auto& tab = powers[g];
        if (tab.empty()) tab.push_back(WeylElement::one(n, w.ring()));
        while (tab.size() <= e) tab.push_back(tab.back() * images[g]);
        return tab[e];
    };
    for (const auto& [I, c] : w.terms()) {
        WeylElement term = WeylElement::constant(n, c);
        for (unsigned g = 0; g < 2 * n; ++g)
            if (I[g] > 0) term = term * power(g, I[g]);
        out = out + term;
    }
    return out;
}

void check_images_shape(const std::vector<WeylElement>& images) {
    if (images.empty() || images.size() % 2 != 0)
        fail(Errc::InvalidArgument, "a morphism needs 2n generator images");
    unsigned n = static_cast<unsigned>(images.size()) / 2;
    for (const auto& im : images)
        if (im.pairs() != n || im.ring() != images[0].ring())
            fail(Errc::Mismatch, "generator images disagree on n or ring");
}

Poly poly_in_x_vars(const Poly& q, unsigned n) {
    if (q.nvars() != n) fail(Errc::Mismatch, "potential must live in x_1..x_n");
    return q;
}

WeylElement x_poly_to_weyl(const Poly& q, unsigned n) {
    WeylElement r(n, q.ring());
    for (const auto& [I, c] : q.terms()) {
        MultiIndex J(2 * n, 0);
        for (unsigned v = 0; v < n; ++v) J[v] = I[v];
        r.add_term(J, c);
    }
    return r;
}

} // namespace

WeylMorphism WeylMorphism::validate(std::vector<WeylElement> images,
                                    std::optional<std::vector<WeylElement>> inverse_images,
                                    std::optional<TameWord> provenance) {
    check_images_shape(images);
    unsigned n = static_cast<unsigned>(images.size()) / 2;
    RingDescriptor ring = images[0].ring();

    for (unsigned i = 1; i <= 2 * n; ++i)
        for (unsigned j = i + 1; j <= 2 * n; ++j) {
            WeylElement c = commutator(images[i - 1], images[j - 1]);
            WeylElement want =
                Scalar::from_int(ring, symplectic_form(n, i, j)) * WeylElement::one(n, ring);
            if (c != want)
                fail(Errc::RelationViolation, "[f(zeta_" + std::to_string(i) + "), f(zeta_" +
                                                  std::to_string(j) + ")] != omega_ij");
        }

    if (inverse_images) {
        check_images_shape(*inverse_images);
        if (inverse_images->size() != images.size() || (*inverse_images)[0].ring() != ring)
            fail(Errc::Mismatch, "inverse images disagree with images");
        for (unsigned i = 0; i < 2 * n; ++i) {
            WeylElement gen = WeylElement::generator(n, ring, i + 1);
            if (apply_images(images, (*inverse_images)[i]) != gen ||
                apply_images(*inverse_images, images[i]) != gen)
                fail(Errc::RelationViolation, "claimed inverse does not invert on generators");
        }
    }

    WeylMorphism f(n, ring);
    f.images_ = std::move(images);
    f.inverse_images_ = std::move(inverse_images);
    f.provenance_ = std::move(provenance);
    return f;
}

WeylMorphism WeylMorphism::identity(unsigned n, RingDescriptor ring) {
    std::vector<WeylElement> images;
    for (unsigned i = 1; i <= 2 * n; ++i) images.push_back(WeylElement::generator(n, ring, i));
    WeylMorphism f(n, ring);
    f.images_ = images;
    f.inverse_images_ = images;
    f.provenance_ = TameWord{};
    return f;
}

WeylElement apply(const WeylMorphism& f, const WeylElement& w) {
    if (w.pairs() != f.pairs() || w.ring() != f.ring())
        fail(Errc::Mismatch, "element and morphism disagree on n or ring");
    return apply_images(f.images(), w);
}

WeylMorphism compose(const WeylMorphism& f, const WeylMorphism& g) {
    if (f.pairs() != g.pairs() || f.ring() != g.ring())
        fail(Errc::Mismatch, "morphisms disagree on n or ring");
    WeylMorphism r(f.pairs(), f.ring());
    r.images_.reserve(2 * f.pairs());
    for (const auto& gi : g.images()) r.images_.push_back(apply_images(f.images(), gi));
    if (f.inverse_images() && g.inverse_images()) {
        std::vector<WeylElement> inv;
        inv.reserve(2 * f.pairs());
        for (const auto& fi : *f.inverse_images()) inv.push_back(apply_images(*g.inverse_images(), fi));
        r.inverse_images_ = std::move(inv);
    }
    if (f.provenance() && g.provenance()) {
        TameWord w = *f.provenance();
        w.insert(w.end(), g.provenance()->begin(), g.provenance()->end());
        r.provenance_ = std::move(w);
    }
    return r;
}

WeylMorphism elementary(unsigned n, const Poly& potential) {
    const Poly F = poly_in_x_vars(potential, n);
    if (!F.coeff(MultiIndex(n, 0)).is_zero())
        fail(Errc::InvalidArgument, "elementary potential must have zero constant term");
    RingDescriptor ring = F.ring();

    std::vector<WeylElement> images, inverse;
    for (unsigned i = 1; i <= n; ++i) {
        images.push_back(WeylElement::generator(n, ring, i));
        inverse.push_back(WeylElement::generator(n, ring, i));
    }
    for (unsigned i = 1; i <= n; ++i) {
        WeylElement grad = x_poly_to_weyl(derivative(F, i), n);
        images.push_back(WeylElement::generator(n, ring, n + i) + grad);
        inverse.push_back(WeylElement::generator(n, ring, n + i) - grad);
    }
    return WeylMorphism::validate(std::move(images), std::move(inverse), TameWord{ElementaryGen{F}});
}

WeylMorphism linear_symplectic(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        fail(Errc::NotSymplectic, "matrix must be 2n x 2n");
    if (!is_symplectic(m)) fail(Errc::NotSymplectic, "M^T J M != J");
    unsigned n = m.rows() / 2;
    RingDescriptor ring = m.ring();
    Mat minv = symplectic_inverse(m);

    auto images_of = [&](const Mat& mat) {
        std::vector<WeylElement> images;
        for (unsigned i = 0; i < 2 * n; ++i) {
            WeylElement im(n, ring);
            for (unsigned j = 0; j < 2 * n; ++j)
                im = im + mat.at(i, j) * WeylElement::generator(n, ring, j + 1);
            images.push_back(std::move(im));
        }
        return images;
    };
    return WeylMorphism::validate(images_of(m), images_of(minv), TameWord{LinearGen{m}});
}

WeylMorphism inverse_from_provenance(const WeylMorphism& f) {
    if (!f.provenance())
        fail(Errc::InvalidArgument, "no provenance word; cannot invert");
    return morphism_from_word(f.pairs(), f.ring(), inverse_word(*f.provenance()));
}

int degree(const WeylMorphism& f) {
    int d = 0;
    for (const auto& im : f.images()) d = std::max(d, total_degree(im).value_or(0));
    if (f.inverse_images())
        for (const auto& im : *f.inverse_images()) d = std::max(d, total_degree(im).value_or(0));
    return d;
}

bool inverse_degree_known(const WeylMorphism& f) { return f.inverse_images().has_value(); }

WeylMorphism reduce_mod_p(const WeylMorphism& f, long p) {
    if (f.ring().kind != RingDescriptor::Kind::Integers)
        fail(Errc::RingMismatch, "can only reduce an integer morphism");
    std::vector<WeylElement> images;
    for (const auto& im : f.images()) images.push_back(reduce_mod_p(im, p));
    std::optional<std::vector<WeylElement>> inverse;
    if (f.inverse_images()) {
        std::vector<WeylElement> inv;
        for (const auto& im : *f.inverse_images()) inv.push_back(reduce_mod_p(im, p));
        inverse = std::move(inv);
    }
    std::optional<TameWord> word;
    if (f.provenance()) word = reduce_word_mod_p(*f.provenance(), p);
    return WeylMorphism::validate(std::move(images), std::move(inverse), std::move(word));
}

// ---------------------------------------------------------------------------
// SymplectoMap

SymplectoMap SymplectoMap::identity(unsigned n, RingDescriptor ring) {
    SymplectoMap s{n, ring, {}};
    for (unsigned i = 1; i <= 2 * n; ++i) s.images.push_back(Poly::variable(2 * n, ring, i));
    return s;
}

SymplectoMap compose(const SymplectoMap& s, const SymplectoMap& r) {
    if (s.n != r.n || s.ring != r.ring) fail(Errc::Mismatch, "symplectomorphisms disagree on n or ring");
    SymplectoMap out{s.n, s.ring, {}};
    for (const auto& ri : r.images) out.images.push_back(substitute(ri, s.images));
    return out;
}

SymplectoMap reduce_mod_p(const SymplectoMap& s, long p) {
    SymplectoMap out{s.n, RingDescriptor::prime_field(p), {}};
    for (const auto& im : s.images) out.images.push_back(reduce_mod_p(im, p));
    return out;
}

int degree(const SymplectoMap& s) {
    int d = 0;
    for (const auto& im : s.images) d = std::max(d, total_degree(im).value_or(0));
    return d;
}

SymplectoMap classical_symplecto(unsigned n, const RingDescriptor& ring, const TameWord& word) {
    SymplectoMap result = SymplectoMap::identity(n, ring);
    for (const auto& gen : word) {
        SymplectoMap g{n, ring, {}};
        if (const auto* e = std::get_if<ElementaryGen>(&gen)) {
            for (unsigned i = 1; i <= n; ++i) g.images.push_back(Poly::variable(2 * n, ring, i));
            for (unsigned i = 1; i <= n; ++i)
                g.images.push_back(Poly::variable(2 * n, ring, n + i) +
                                   widen_vars(derivative(e->potential, i), 2 * n));
        } else {
            const auto& m = std::get<LinearGen>(gen).matrix;
            for (unsigned i = 0; i < 2 * n; ++i) {
                Poly im(2 * n, ring);
                for (unsigned j = 0; j < 2 * n; ++j)
                    im = im + m.at(i, j) * Poly::variable(2 * n, ring, j + 1);
                g.images.push_back(std::move(im));
            }
        }
        result = compose(result, g);
    }
    return result;
}

WeylMorphism morphism_from_word(unsigned n, const RingDescriptor& ring, const TameWord& word) {
    WeylMorphism result = WeylMorphism::identity(n, ring);
    for (const auto& gen : word) {
        WeylMorphism g = std::holds_alternative<ElementaryGen>(gen)
                             ? elementary(n, std::get<ElementaryGen>(gen).potential)
                             : linear_symplectic(std::get<LinearGen>(gen).matrix);
        result = compose(result, g);
    }
    return result;
}

namespace {

Scalar scalar_to_ring(const Scalar& s, const RingDescriptor& ring) {
    if (s.ring() == ring) return s;
    if (s.ring().kind != RingDescriptor::Kind::Integers)
        fail(Errc::RingMismatch, "can only move integer coefficients into another ring");
    mpz_class v = s.integer_value() % ring.p;
    if (v < 0) v += ring.p;
    return Scalar::from_int(ring, v.get_si());
}

Poly poly_to_ring(const Poly& q, const RingDescriptor& ring) {
    Poly r(q.nvars(), ring);
    for (const auto& [I, c] : q.terms()) r.add_term(I, scalar_to_ring(c, ring));
    return r;
}

Mat mat_to_ring(const Mat& m, const RingDescriptor& ring) {
    Mat r(m.rows(), m.cols(), Scalar::zero(ring));
    for (unsigned i = 0; i < m.rows(); ++i)
        for (unsigned j = 0; j < m.cols(); ++j) r.at(i, j) = scalar_to_ring(m.at(i, j), ring);
    return r;
}

TameWord word_to_ring(const TameWord& word, const RingDescriptor& ring) {
    TameWord out;
    for (const auto& gen : word) {
        if (const auto* e = std::get_if<ElementaryGen>(&gen))
            out.push_back(ElementaryGen{poly_to_ring(e->potential, ring)});
        else
            out.push_back(LinearGen{mat_to_ring(std::get<LinearGen>(gen).matrix, ring)});
    }
    return out;
}

} // namespace

TameWord reduce_word_mod_p(const TameWord& word, long p) {
    return word_to_ring(word, RingDescriptor::prime_field(p));
}

TameWord inverse_word(const TameWord& word) {
    TameWord out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (const auto* e = std::get_if<ElementaryGen>(&*it))
            out.push_back(ElementaryGen{-e->potential});
        else
            out.push_back(LinearGen{symplectic_inverse(std::get<LinearGen>(*it).matrix)});
    }
    return out;
}

int word_pairs(const TameWord& word) {
    if (word.empty()) return 0;
    if (const auto* e = std::get_if<ElementaryGen>(&word.front()))
        return static_cast<int>(e->potential.nvars());
    return static_cast<int>(std::get<LinearGen>(word.front()).matrix.rows() / 2);
}

// ---------------------------------------------------------------------------
// random_tame

namespace {

long rand_below(std::mt19937_64& rng, long k) { // uniform-ish in [0,k)
    return static_cast<long>(rng() % static_cast<unsigned long>(k));
}

long rand_nonzero(std::mt19937_64& rng, long bound) {
    long v = 1 + rand_below(rng, bound);
    return (rng() & 1) ? v : -v;
}

ElementaryGen random_elementary(std::mt19937_64& rng, unsigned n, unsigned degree_bound, long coeff_bound) {
    RingDescriptor zz = RingDescriptor::integers();
    Poly f(n, zz);
    unsigned nterms = 1 + static_cast<unsigned>(rand_below(rng, 2));
    for (unsigned k = 0; k < nterms; ++k) {
        unsigned d = 1 + static_cast<unsigned>(rand_below(rng, degree_bound));
        MultiIndex I(n, 0);
        for (unsigned r = 0; r < d; ++r) ++I[rand_below(rng, n)];
        f.add_term(I, Scalar::integer(rand_nonzero(rng, coeff_bound)));
    }
    if (f.is_zero()) f = Poly::variable(n, zz, 1);
    return ElementaryGen{f};
}

LinearGen random_linear(std::mt19937_64& rng, unsigned n, long coeff_bound) {
    RingDescriptor zz = RingDescriptor::integers();
    unsigned kind = static_cast<unsigned>(rand_below(rng, 4));
    Mat m = Mat::identity(2 * n, zz);
    switch (kind) {
    case 0: // Fourier-type swap
        m = Mat::symplectic_j(n, zz);
        break;
    case 1: { // upper shear [[I, B], [0, I]], B symmetric
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                Scalar b = Scalar::integer(rand_nonzero(rng, coeff_bound));
                m.at(i, n + j) = b;
                m.at(j, n + i) = b;
            }
        break;
    }
    case 2: { // lower shear [[I, 0], [B, I]], B symmetric
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                Scalar b = Scalar::integer(rand_nonzero(rng, coeff_bound));
                m.at(n + i, j) = b;
                m.at(n + j, i) = b;
            }
        break;
    }
    default: // GL block [[A, 0], [0, A^-T]] with unimodular A
        if (n == 1) {
            long s = (rng() & 1) ? 1 : -1;
            m.at(0, 0) = Scalar::integer(s);
            m.at(1, 1) = Scalar::integer(s);
        } else {
            // A = I + c E_{ab}, so A^-T = I - c E_{ba}
            unsigned a = static_cast<unsigned>(rand_below(rng, n));
            unsigned b = (a + 1 + static_cast<unsigned>(rand_below(rng, n - 1))) % n;
            long c = rand_nonzero(rng, coeff_bound);
            m.at(a, b) = Scalar::integer(c);
            m.at(n + b, n + a) = Scalar::integer(-c);
        }
        break;
    }
    return LinearGen{m};
}

} // namespace

WeylMorphism random_tame(unsigned long seed, unsigned n, unsigned word_length, unsigned degree_bound,
                         long coeff_bound) {
    if (n < 1 || degree_bound < 1 || coeff_bound < 1)
        fail(Errc::InvalidArgument, "random_tame bounds must be positive");
    std::mt19937_64 rng(seed);
    TameWord word;
    bool elementary_turn = (rng() & 1) != 0;
    for (unsigned i = 0; i < word_length; ++i) {
        if (elementary_turn)
            word.push_back(random_elementary(rng, n, degree_bound, coeff_bound));
        else
            word.push_back(random_linear(rng, n, coeff_bound));
        elementary_turn = !elementary_turn;
    }
    return morphism_from_word(n, RingDescriptor::integers(), word);
}

} // namespace weylbkk
