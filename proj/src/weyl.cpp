#include "weylbkk/weyl.hpp"

#include <utility>

namespace weylbkk {

int symplectic_form(unsigned n, unsigned i, unsigned j) {
    if (i == n + j) return 1;
    if (j == n + i) return -1;
    return 0;
}

WeylElement::WeylElement(unsigned n, RingDescriptor ring) : n_(n), ring_(ring) {
    if (n == 0) fail(Errc::InvalidArgument, "Weyl algebra needs n >= 1");
}

WeylElement WeylElement::one(unsigned n, RingDescriptor ring) {
    return constant(n, Scalar::one(ring));
}

WeylElement WeylElement::constant(unsigned n, const Scalar& c) {
    WeylElement e(n, c.ring());
    e.add_term(MultiIndex(2 * n, 0), c);
    return e;
}

WeylElement WeylElement::generator(unsigned n, RingDescriptor ring, unsigned gen) {
    if (gen < 1 || gen > 2 * n)
        fail(Errc::IndexOutOfRange, "generator index " + std::to_string(gen) + " with n=" + std::to_string(n));
    WeylElement e(n, ring);
    MultiIndex I(2 * n, 0);
    I[gen - 1] = 1;
    e.add_term(I, Scalar::one(ring));
    return e;
}

WeylElement WeylElement::monomial(unsigned n, const Scalar& c, const MultiIndex& I) {
    WeylElement e(n, c.ring());
    e.add_term(I, c);
    return e;
}

bool WeylElement::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Scalar WeylElement::constant_term() const { return coeff(MultiIndex(2 * n_, 0)); }

Scalar WeylElement::coeff(const MultiIndex& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void WeylElement::add_term(const MultiIndex& I, const Scalar& c) {
    if (I.size() != 2 * n_) fail(Errc::InvalidArgument, "multi-index length mismatch");
    if (c.ring() != ring_) fail(Errc::RingMismatch, "coefficient ring differs from element ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(I, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

void require_compatible(const WeylElement& a, const WeylElement& b) {
    if (a.pairs() != b.pairs() || a.ring() != b.ring())
        fail(Errc::Mismatch, "Weyl elements with different n or ring");
}

// Structure constant C(a,s) * C(b,s) * s! for one generator pair.
// Computed in Z; the mod-p variant is its exact reduction (terms with s >= p
// vanish because v_p(s!) >= 1, and C(a,s) mod p follows Lucas).
const std::vector<mpz_class>& structure_constants_z(unsigned a, unsigned b) {
    thread_local std::map<std::pair<unsigned, unsigned>, std::vector<mpz_class>> cache;
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    unsigned m = std::min(a, b);
    std::vector<mpz_class> v(m + 1);
    mpz_class ca, cb, fs;
    for (unsigned s = 0; s <= m; ++s) {
        mpz_bin_uiui(ca.get_mpz_t(), a, s);
        mpz_bin_uiui(cb.get_mpz_t(), b, s);
        mpz_fac_ui(fs.get_mpz_t(), s);
        v[s] = ca * cb * fs;
    }
    return cache.emplace(key, std::move(v)).first->second;
}

using u128 = unsigned __int128;

long mulmod_l(long x, long y, long p) { return static_cast<long>((u128)x * (u128)y % (u128)p); }

long powmod_l(long x, long e, long p) {
    long r = 1 % p;
    x %= p;
    while (e > 0) {
        if (e & 1) r = mulmod_l(r, x, p);
        x = mulmod_l(x, x, p);
        e >>= 1;
    }
    return r;
}

// C(n,s) mod p for s < p, via the first Lucas digit.
long binom_mod_p(unsigned long n, unsigned s, long p) {
    unsigned long n0 = n % static_cast<unsigned long>(p);
    if (s > n0) return 0;
    long r = 1;
    for (unsigned i = 1; i <= s; ++i) {
        r = mulmod_l(r, static_cast<long>(n0 - i + 1), p);
        r = mulmod_l(r, powmod_l(i, p - 2, p), p);
    }
    return r;
}

const std::vector<long>& structure_constants_mod_p(unsigned a, unsigned b, long p) {
    thread_local std::map<std::tuple<long, unsigned, unsigned>, std::vector<long>> cache;
    auto key = std::make_tuple(p, a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    unsigned m = std::min(a, b);
    std::vector<long> v(m + 1, 0);
    long fact = 1;
    for (unsigned s = 0; s <= m && s < static_cast<unsigned>(p); ++s) {
        if (s > 0) fact = mulmod_l(fact, s, p);
        long c = mulmod_l(binom_mod_p(a, s, p), binom_mod_p(b, s, p), p);
        v[s] = mulmod_l(c, fact, p);
    }
    return cache.emplace(key, std::move(v)).first->second;
}

} // namespace

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    require_compatible(a, b);
    WeylElement r = a;
    for (const auto& [I, c] : b.terms()) r.add_term(I, c);
    return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }

WeylElement WeylElement::operator-() const {
    WeylElement r(n_, ring_);
    for (const auto& [I, c] : terms_) r.terms_.emplace(I, -c);
    return r;
}

WeylElement operator*(const Scalar& c, const WeylElement& a) {
    if (c.ring() != a.ring()) fail(Errc::RingMismatch, "scalar ring differs from element ring");
    WeylElement r(a.pairs(), a.ring());
    if (c.is_zero()) return r;
    for (const auto& [I, v] : a.terms()) r.add_term(I, c * v);
    return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    require_compatible(a, b);
    const unsigned n = a.pairs();
    const RingDescriptor ring = a.ring();
    const long p = ring.characteristic();
    WeylElement out(n, ring);

    MultiIndex R(2 * n);
    std::vector<unsigned> s(n), smax(n);
    for (const auto& [I, ca] : a.terms()) {
        for (const auto& [J, cb] : b.terms()) {
            const Scalar cc = ca * cb;
            for (unsigned k = 0; k < n; ++k) {
                smax[k] = std::min(I[n + k], J[k]);
                // over characteristic p every term with some s_k >= p vanishes
                if (p > 0) smax[k] = std::min<unsigned>(smax[k], static_cast<unsigned>(p - 1));
                s[k] = 0;
            }
            while (true) {
                bool zero_const = false;
                Scalar m = cc;
                if (p > 0) {
                    long cm = 1;
                    for (unsigned k = 0; k < n && cm != 0; ++k)
                        cm = mulmod_l(cm, structure_constants_mod_p(I[n + k], J[k], p)[s[k]], p);
                    if (cm == 0)
                        zero_const = true;
                    else if (cm != 1)
                        m = Scalar::from_int(ring, cm) * m;
                } else {
                    mpz_class cm = 1;
                    for (unsigned k = 0; k < n; ++k) cm *= structure_constants_z(I[n + k], J[k])[s[k]];
                    if (cm != 1) m = Scalar::integer(std::move(cm)) * m;
                }
                if (!zero_const) {
                    for (unsigned k = 0; k < n; ++k) {
                        R[k] = I[k] + J[k] - s[k];
                        R[n + k] = I[n + k] + J[n + k] - s[k];
                    }
                    out.add_term(R, m);
                }
                // odometer over the s-vector
                unsigned k = 0;
                while (k < n && s[k] == smax[k]) s[k++] = 0;
                if (k == n) break;
                ++s[k];
            }
        }
    }
    return out;
}

WeylElement mul_naive(const WeylElement& a, const WeylElement& b) {
    require_compatible(a, b);
    const unsigned n = a.pairs();
    WeylElement out(n, a.ring());

    for (const auto& [I, ca] : a.terms()) {
        for (const auto& [J, cb] : b.terms()) {
            // word of 1-based generator indices: monomial of a, then monomial of b
            std::vector<unsigned> word;
            for (unsigned g = 0; g < 2 * n; ++g)
                for (unsigned r = 0; r < I[g]; ++r) word.push_back(g + 1);
            for (unsigned g = 0; g < 2 * n; ++g)
                for (unsigned r = 0; r < J[g]; ++r) word.push_back(g + 1);

            std::vector<std::pair<Scalar, std::vector<unsigned>>> work;
            work.emplace_back(ca * cb, std::move(word));
            while (!work.empty()) {
                auto [c, w] = std::move(work.back());
                work.pop_back();
                size_t t = 0;
                bool sorted = true;
                for (; t + 1 < w.size(); ++t)
                    if (w[t] > w[t + 1]) { sorted = false; break; }
                if (sorted) {
                    MultiIndex R(2 * n, 0);
                    for (unsigned g : w) ++R[g - 1];
                    out.add_term(R, c);
                    continue;
                }
                if (w[t] == w[t + 1] + n) {
                    // y_k x_k -> x_k y_k + 1
                    std::vector<unsigned> shorter(w);
                    shorter.erase(shorter.begin() + t, shorter.begin() + t + 2);
                    work.emplace_back(c, std::move(shorter));
                }
                std::swap(w[t], w[t + 1]);
                work.emplace_back(std::move(c), std::move(w));
            }
        }
    }
    return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement ad_pow(const WeylElement& x, const WeylElement& y, unsigned d) {
    WeylElement r = y;
    for (unsigned i = 0; i < d; ++i) r = commutator(x, r);
    return r;
}

WeylElement pow(const WeylElement& a, unsigned long m) {
    WeylElement result = WeylElement::one(a.pairs(), a.ring());
    if (m == 0) return result;
    // For sparse bases, repeated multiplication beats squaring: intermediate
    // powers dwarf the base, and large*small products are much cheaper than
    // large*large squarings (9x on degree-8 images at p=11).
    if (a.terms().size() <= 64) {
        result = a;
        for (unsigned long k = 1; k < m; ++k) result = result * a;
        return result;
    }
    WeylElement base = a;
    while (m > 0) {
        if (m & 1) result = result * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return result;
}

std::optional<int> total_degree(const WeylElement& a) {
    if (a.is_zero()) return std::nullopt;
    return static_cast<int>(total(a.terms().rbegin()->first));
}

WeylElement reduce_mod_p(const WeylElement& a, long p) {
    WeylElement r(a.pairs(), RingDescriptor::prime_field(p));
    for (const auto& [I, c] : a.terms()) r.add_term(I, reduce_mod_p(c, p));
    return r;
}

WeylElement lift_to_integers(const WeylElement& a) {
    WeylElement r(a.pairs(), RingDescriptor::integers());
    for (const auto& [I, c] : a.terms()) r.add_term(I, lift_to_integers(c));
    return r;
}

WeylElement divide_exact(const WeylElement& a, long d) {
    if (a.ring().kind != RingDescriptor::Kind::Integers)
        fail(Errc::RingMismatch, "exact division needs integer coefficients");
    WeylElement r(a.pairs(), a.ring());
    for (const auto& [I, c] : a.terms()) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.integer_value().get_mpz_t(), mpz_class(d).get_mpz_t());
        if (rem != 0)
            fail(Errc::NotDivisibleByP, "coefficient " + c.to_string() + " not divisible by " + std::to_string(d));
        r.add_term(I, Scalar::integer(std::move(q)));
    }
    return r;
}

} // namespace weylbkk
