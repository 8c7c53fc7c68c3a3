#include "weylbkk/bkk.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "weylbkk/center.hpp"
#include "weylbkk/io.hpp"

namespace weylbkk {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

long require_char_p(const RingDescriptor& ring, const char* what) {
    if (!ring.positive_characteristic())
        fail(Errc::NotPositiveCharacteristic, std::string(what) + " needs characteristic p");
    return ring.p;
}

void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn) {
    if (threads == 0) threads = 1;
    threads = std::min<size_t>(threads, count);
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// Commutative read of a Weyl element: same exponents, same coefficients,
// in the 2n-variable polynomial ring.
Poly commutative_read(const WeylElement& e) {
    Poly q(e.nvars(), e.ring());
    for (const auto& [I, c] : e.terms()) q.add_term(I, c);
    return q;
}

} // namespace

SymplectoMap center_restriction(const WeylMorphism& f) {
    long p = require_char_p(f.ring(), "center restriction");
    SymplectoMap s{f.pairs(), f.ring(), {}};
    for (unsigned i = 0; i < 2 * f.pairs(); ++i) {
        WeylElement w = pow(f.images()[i], static_cast<unsigned long>(p));
        if (!is_central(w))
            fail(Errc::NotCentral, "f(zeta_" + std::to_string(i + 1) +
                                       ")^p escaped the center (internal fault); witness: " + io::to_string(w));
        s.images.push_back(extract_center(w));
    }
    return s;
}

SymplectoMap untwist(const SymplectoMap& s) {
    require_char_p(s.ring, "untwist");
    SymplectoMap out{s.n, s.ring, {}};
    for (const auto& im : s.images) {
        Poly q(im.nvars(), im.ring());
        for (const auto& [I, c] : im.terms()) q.add_term(I, c.inverse_frobenius());
        out.images.push_back(std::move(q));
    }
    return out;
}

PhiResult phi_p(const WeylMorphism& f) {
    PhiResult r;
    r.p = require_char_p(f.ring(), "phi_p");
    r.morphism_degree = degree(f);
    r.inverse_degree_known = inverse_degree_known(f);
    r.precondition_ok = r.p >= r.morphism_degree + 2;
    r.map = untwist(center_restriction(f));
    return r;
}

CheckReport verify_symplectic(const SymplectoMap& s) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check = "verify_symplectic";
    bool lift_bracket = s.ring.kind == RingDescriptor::Kind::PrimeField;
    rep.params = {{"n", std::to_string(s.n)},
                  {"ring", s.ring.to_string()},
                  {"bracket", lift_bracket ? "lift_commutator" : "classical"}};
    rep.pass = true;
    for (unsigned i = 1; i <= 2 * s.n; ++i)
        for (unsigned j = i + 1; j <= 2 * s.n; ++j) {
            CenterPoly b = lift_bracket ? poisson_bracket(s.images[i - 1], s.images[j - 1])
                                        : classical_bracket(s.images[i - 1], s.images[j - 1]);
            CenterPoly want =
                Poly::constant(2 * s.n, Scalar::from_int(s.ring, symplectic_form(s.n, i, j)));
            if (b != want) {
                rep.pass = false;
                rep.witnesses.push_back("{s(z" + std::to_string(i) + "), s(z" + std::to_string(j) +
                                        ")} = " + io::to_string(b));
            }
        }
    rep.timing_ms = ms_since(t0);
    return rep;
}

CheckReport dominant_check(const WeylMorphism& f) {
    auto t0 = Clock::now();
    long p = require_char_p(f.ring(), "dominant check");
    int deg = degree(f);
    if (p % 2 == 0 || p < deg + 2)
        fail(Errc::PreconditionViolated,
             "dominant check needs odd p >= Deg f + 2 (p=" + std::to_string(p) +
                 ", Deg f=" + std::to_string(deg) + ")");

    CheckReport rep;
    rep.check = "dominant_check";
    rep.params = {{"p", std::to_string(p)}, {"deg", std::to_string(deg)}};
    rep.pass = true;
    SymplectoMap s = center_restriction(f);
    for (unsigned i = 0; i < 2 * f.pairs(); ++i) {
        Poly got = top_homogeneous(s.images[i]);
        Poly want = frobenius_coeffs(top_homogeneous(commutative_read(f.images()[i])));
        if (got != want) {
            rep.pass = false;
            rep.witnesses.push_back("top of f^c(z" + std::to_string(i + 1) + ") = " + io::to_string(got) +
                                    ", expected " + io::to_string(want));
        }
    }
    rep.timing_ms = ms_since(t0);
    return rep;
}

CheckReport frobenius_image_check(const SymplectoMap& s) {
    auto t0 = Clock::now();
    require_char_p(s.ring, "frobenius image check");
    CheckReport rep;
    rep.check = "frobenius_image_check";
    rep.params = {{"ring", s.ring.to_string()}};
    rep.pass = true;
    for (unsigned i = 0; i < 2 * s.n; ++i) {
        for (const auto& [I, c] : s.images[i].terms()) {
            try {
                (void)c.inverse_frobenius();
            } catch (const AlgebraError& e) {
                if (e.code() != Errc::NotInFrobeniusImage) throw;
                rep.pass = false;
                rep.witnesses.push_back("coefficient " + c.to_string() + " of image " +
                                        std::to_string(i + 1) + " has no p-th root");
            }
        }
    }
    rep.timing_ms = ms_since(t0);
    return rep;
}

CheckReport frobenius_poly_check(const WeylMorphism& f) {
    long p = require_char_p(f.ring(), "frobenius polynomial check");
    int deg = degree(f);
    if (p < deg + 2)
        fail(Errc::PreconditionViolated, "needs p >= Deg f + 2 (p=" + std::to_string(p) +
                                             ", Deg f=" + std::to_string(deg) + ")");
    CheckReport rep = frobenius_image_check(center_restriction(f));
    rep.check = "frobenius_poly_check";
    rep.params.emplace_back("p", std::to_string(p));
    rep.params.emplace_back("deg", std::to_string(deg));
    return rep;
}

CheckReport homomorphism_check(const WeylMorphism& f, const WeylMorphism& g) {
    auto t0 = Clock::now();
    if (f.pairs() != g.pairs() || f.ring() != g.ring())
        fail(Errc::Mismatch, "morphisms disagree on n or ring");
    long p = require_char_p(f.ring(), "homomorphism check");

    CheckReport rep;
    rep.check = "homomorphism_check";
    PhiResult lhs = phi_p(compose(f, g));
    PhiResult pf = phi_p(f);
    PhiResult pg = phi_p(g);
    rep.params = {{"p", std::to_string(p)},
                  {"deg_f", std::to_string(pf.morphism_degree)},
                  {"deg_g", std::to_string(pg.morphism_degree)}};
    rep.precondition_ok = p >= pf.morphism_degree * pg.morphism_degree + 2;
    SymplectoMap rhs = compose(pf.map, pg.map);
    rep.pass = lhs.map == rhs;
    if (!rep.pass)
        rep.witnesses.push_back("phi(f o g) = [" + io::to_string(lhs.map) + "] but phi(f) o phi(g) = [" +
                                io::to_string(rhs) + "]");
    rep.timing_ms = ms_since(t0);
    return rep;
}

CheckReport subdominant_report(const WeylMorphism& f) {
    auto t0 = Clock::now();
    require_char_p(f.ring(), "subdominant report");
    CheckReport rep;
    rep.check = "subdominant_report";
    rep.params = {{"p", std::to_string(f.ring().p)},
                  {"deg", std::to_string(degree(f))},
                  {"experimental", "true"}};
    rep.pass = true; // observations only, nothing is asserted
    SymplectoMap u = untwist(center_restriction(f));
    for (unsigned i = 0; i < 2 * f.pairs(); ++i) {
        Poly commutative = commutative_read(f.images()[i]);
        auto d = total_degree(commutative);
        if (!d || *d < 1) continue;
        auto part = [&](const Poly& q) {
            Poly h(q.nvars(), q.ring());
            for (const auto& [I, c] : q.terms())
                if (static_cast<int>(total(I)) == *d - 1) h.add_term(I, c);
            return h;
        };
        Poly got = part(u.images[i]);
        Poly want = part(commutative);
        rep.witnesses.push_back("image " + std::to_string(i + 1) + ": subdominant part " +
                                (got == want ? "preserved" : "differs: computed " + io::to_string(got) +
                                                                 ", commutative " + io::to_string(want)));
    }
    rep.timing_ms = ms_since(t0);
    return rep;
}

bool IndependenceReport::all_preconditions_ok() const {
    for (const auto& r : per_prime)
        if (!r.precondition_ok) return false;
    return true;
}

bool IndependenceReport::all_match() const {
    for (const auto& r : per_prime)
        if (!r.match) return false;
    return crt_matches_expected && pairwise_consistent;
}

IndependenceReport independence_report(unsigned n, const TameWord& word, const std::vector<long>& primes,
                                       unsigned threads) {
    if (primes.empty()) fail(Errc::EmptyInput, "no primes given");
    for (size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) fail(Errc::InvalidArgument, std::to_string(primes[i]) + " is not prime");
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                fail(Errc::InvalidArgument, "repeated prime " + std::to_string(primes[i]));
    }

    auto t0 = Clock::now();
    IndependenceReport rep;
    rep.n = n;
    rep.word = word;
    RingDescriptor zz = RingDescriptor::integers();
    WeylMorphism f_z = morphism_from_word(n, zz, word);
    rep.degree_bound = degree(f_z);
    rep.expected_integer = classical_symplecto(n, zz, word);

    rep.per_prime.assign(primes.size(), PrimeResult{});
    parallel_for(primes.size(), threads, [&](size_t k) {
        long p = primes[k];
        PrimeResult r;
        r.p = p;
        r.precondition_ok = p >= rep.degree_bound + 2;
        WeylMorphism f_p = morphism_from_word(n, RingDescriptor::prime_field(p), reduce_word_mod_p(word, p));
        r.computed = phi_p(f_p).map;
        r.expected = reduce_mod_p(rep.expected_integer, p);
        r.match = r.computed == r.expected;
        rep.per_prime[k] = std::move(r);
    });

    // CRT reconstruction of every coefficient across the prime set, compared
    // with the integer coefficients of tau(word); additionally every prime
    // pair must reconstruct identically.
    rep.crt_matches_expected = true;
    rep.pairwise_consistent = true;
    rep.crt_reconstructed = SymplectoMap{n, zz, {}};
    for (unsigned i = 0; i < 2 * n; ++i) {
        std::vector<MultiIndex> support;
        auto collect = [&](const Poly& q) {
            for (const auto& [I, c] : q.terms())
                if (std::find(support.begin(), support.end(), I) == support.end()) support.push_back(I);
        };
        collect(rep.expected_integer.images[i]);
        for (const auto& r : rep.per_prime) collect(r.computed.images[i]);

        Poly recon(2 * n, zz);
        for (const auto& I : support) {
            std::vector<Scalar> residues;
            for (const auto& r : rep.per_prime)
                residues.push_back(Scalar::residue(r.computed.images[i].coeff(I).residue_value(), r.p));
            Scalar full = crt_reconstruct(residues);
            recon.add_term(I, full);
            if (full != rep.expected_integer.images[i].coeff(I)) rep.crt_matches_expected = false;
            if (residues.size() >= 2) {
                for (size_t a = 0; a + 1 < residues.size() && rep.pairwise_consistent; ++a)
                    for (size_t b = a + 1; b < residues.size(); ++b) {
                        Scalar pair = crt_reconstruct({residues[a], residues[b]});
                        if (pair != full) {
                            rep.pairwise_consistent = false;
                            break;
                        }
                    }
            }
        }
        rep.crt_reconstructed.images.push_back(std::move(recon));
    }
    rep.timing_ms = ms_since(t0);
    return rep;
}

std::vector<long> default_primes(int degree_bound, int count) {
    return primes_above(degree_bound + 1, count);
}

} // namespace weylbkk
