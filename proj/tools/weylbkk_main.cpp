#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "weylbkk/center.hpp"
#include "weylbkk/io.hpp"
#include "weylbkk/ultra.hpp"

using namespace weylbkk;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WEYLBKK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidArgument, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Output {
    bool structured = false;
    bool strict = false;
    bool failed = false;
    bool warned = false;

    void report(const CheckReport& rep) {
        if (!rep.pass) failed = true;
        if (!rep.precondition_ok) warned = true;
        if (structured) {
            std::cout << io::emit_report(rep) << "\n";
        } else {
            std::cout << (rep.pass ? "PASS" : "FAIL") << " " << rep.check;
            for (const auto& [k, v] : rep.params) std::cout << " " << k << "=" << v;
            if (!rep.precondition_ok) std::cout << " [precondition violated]";
            std::cout << "\n";
            for (const auto& w : rep.witnesses) std::cout << "    witness: " << w << "\n";
        }
    }

    void report(const IndependenceReport& rep) {
        if (!rep.all_match()) failed = true;
        if (!rep.all_preconditions_ok()) warned = true;
        if (structured) {
            std::cout << io::emit_report(rep) << "\n";
            return;
        }
        std::cout << (rep.all_match() ? "PASS" : "FAIL") << " independence n=" << rep.n
                  << " deg=" << rep.degree_bound << "\n";
        std::cout << "    expected tau(word): " << io::to_string(rep.expected_integer) << "\n";
        for (const auto& r : rep.per_prime) {
            std::cout << "    p=" << r.p << ": " << (r.match ? "match" : "MISMATCH")
                      << (r.precondition_ok ? "" : " [p < Deg f + 2]") << "\n";
            if (!r.match) std::cout << "        computed: " << io::to_string(r.computed) << "\n";
        }
        std::cout << "    crt matches tau: " << (rep.crt_matches_expected ? "yes" : "NO")
                  << ", pairwise consistent: " << (rep.pairwise_consistent ? "yes" : "NO") << "\n";
    }

    int exit_code() const {
        if (failed || (strict && warned)) return kExitCheckFailed;
        return kExitPass;
    }
};

Poly random_center_poly(std::mt19937_64& rng, unsigned n, const RingDescriptor& ring, unsigned maxdeg,
                        unsigned nterms) {
    Poly q(2 * n, ring);
    for (unsigned t = 0; t < nterms; ++t) {
        MultiIndex I(2 * n, 0);
        unsigned d = rng() % (maxdeg + 1);
        for (unsigned r = 0; r < d; ++r) ++I[rng() % (2 * n)];
        q.add_term(I, Scalar::from_int(ring, static_cast<long>(rng() % ring.p)));
    }
    return q;
}

int cmd_verify_bracket(unsigned n, long p, unsigned long seed, Output& out) {
    RingDescriptor ring = RingDescriptor::prime_field(p);
    auto t0 = std::chrono::steady_clock::now();

    CheckReport gen;
    gen.check = "bracket_generators";
    gen.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}};
    gen.pass = true;
    for (unsigned i = 1; i <= 2 * n; ++i)
        for (unsigned j = 1; j <= 2 * n; ++j) {
            Poly xi = Poly::variable(2 * n, ring, i);
            Poly xj = Poly::variable(2 * n, ring, j);
            Poly want = Poly::constant(2 * n, Scalar::from_int(ring, symplectic_form(n, i, j)));
            if (poisson_bracket(xi, xj) != want) {
                gen.pass = false;
                gen.witnesses.push_back("{z" + std::to_string(i) + ",z" + std::to_string(j) + "} != omega");
            }
        }
    gen.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.report(gen);

    std::mt19937_64 rng(seed);
    CheckReport suite;
    suite.check = "bracket_properties";
    suite.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"seed", std::to_string(seed)}};
    suite.pass = true;
    t0 = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 25 && suite.pass; ++trial) {
        Poly a = random_center_poly(rng, n, ring, 3, 3);
        Poly b = random_center_poly(rng, n, ring, 3, 3);
        Poly c = random_center_poly(rng, n, ring, 2, 2);
        if (poisson_bracket(a, b) != classical_bracket(a, b)) {
            suite.pass = false;
            suite.witnesses.push_back("bracket oracle mismatch at trial " + std::to_string(trial));
        }
        Poly zero(2 * n, ring);
        if (poisson_bracket(a, b) + poisson_bracket(b, a) != zero) {
            suite.pass = false;
            suite.witnesses.push_back("antisymmetry failed at trial " + std::to_string(trial));
        }
        if (poisson_bracket(a, b * c) != poisson_bracket(a, b) * c + b * poisson_bracket(a, c)) {
            suite.pass = false;
            suite.witnesses.push_back("Leibniz failed at trial " + std::to_string(trial));
        }
        Poly jac = poisson_bracket(a, poisson_bracket(b, c)) + poisson_bracket(b, poisson_bracket(c, a)) +
                   poisson_bracket(c, poisson_bracket(a, b));
        if (jac != zero) {
            suite.pass = false;
            suite.witnesses.push_back("Jacobi failed at trial " + std::to_string(trial));
        }
    }
    suite.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.report(suite);
    return out.exit_code();
}

int cmd_fc(const std::string& path, long p, bool do_untwist, Output& out) {
    WeylMorphism f = io::parse_morphism(slurp(path));
    if (f.ring().kind == RingDescriptor::Kind::Integers) {
        if (p < 2) fail(Errc::InvalidArgument, "--p is required for integer morphism documents");
        f = reduce_mod_p(f, p);
    } else if (p >= 2 && f.ring().p != p) {
        fail(Errc::InvalidArgument, "document ring has p=" + std::to_string(f.ring().p) +
                                        " but --p=" + std::to_string(p) + " was given");
    }

    PhiResult ph;
    if (do_untwist) {
        ph = phi_p(f);
    } else {
        ph.map = center_restriction(f);
        ph.p = f.ring().p;
        ph.morphism_degree = degree(f);
        ph.precondition_ok = ph.p >= ph.morphism_degree + 2;
        ph.inverse_degree_known = inverse_degree_known(f);
    }

    if (!out.structured) {
        std::cout << (do_untwist ? "phi_p(f): " : "f^c: ") << io::to_string(ph.map) << "\n";
        if (!ph.precondition_ok)
            std::cout << "warning: p=" << ph.p << " < Deg f + 2 = " << ph.morphism_degree + 2
                      << "; small-p corrections are possible\n";
        if (!ph.inverse_degree_known)
            std::cout << "note: no inverse images known; degree reflects the forward images only\n";
    }
    if (!ph.precondition_ok) out.warned = true;

    CheckReport rep = verify_symplectic(ph.map);
    rep.precondition_ok = ph.precondition_ok;
    out.report(rep);
    return out.exit_code();
}

int cmd_independence(const std::string& path, std::vector<long> primes, unsigned threads, Output& out) {
    unsigned n = 0;
    RingDescriptor ring = RingDescriptor::integers();
    TameWord word = io::parse_word_document(slurp(path), n, ring);
    if (ring.kind != RingDescriptor::Kind::Integers)
        fail(Errc::InvalidArgument, "independence expects a word over the integers");
    if (primes.empty()) {
        WeylMorphism f = morphism_from_word(n, ring, word);
        primes = default_primes(degree(f), 3);
    }
    out.report(independence_report(n, word, primes, threads));
    return out.exit_code();
}

int cmd_random_suite(unsigned long seed, unsigned n, unsigned count, unsigned word_length,
                     unsigned degree_bound, long coeff_bound, std::vector<long> primes,
                     bool subdominant, unsigned threads, Output& out) {
    for (unsigned i = 0; i < count; ++i) {
        WeylMorphism f = random_tame(seed + i, n, word_length, degree_bound, coeff_bound);
        std::vector<long> ps = primes.empty() ? default_primes(degree(f), 2) : primes;
        IndependenceReport rep = independence_report(n, *f.provenance(), ps, threads);
        out.report(rep);
        for (const auto& r : rep.per_prime) {
            CheckReport vs = verify_symplectic(r.computed);
            out.report(vs);
            WeylMorphism fp = reduce_mod_p(f, r.p);
            out.report(dominant_check(fp));
            if (subdominant) out.report(subdominant_report(fp));
        }
    }
    return out.exit_code();
}

int cmd_ultra_demo(long p, unsigned m, unsigned length, const std::string& xbits, Output& out) {
    if (!is_prime(p)) fail(Errc::InvalidArgument, std::to_string(p) + " is not prime");
    unsigned L = length;
    if (L == 0) {
        L = 1;
        while ((1L << L) < p && L < 20) ++L; // smallest L with p <= 2^L
        L = std::max(L, m + 1);
    }
    if (!xbits.empty()) {
        ultra::BitString x;
        for (char c : xbits) {
            if (c != '0' && c != '1') fail(Errc::InvalidArgument, "--x must be a 0/1 string");
            x.bits.push_back(c == '1');
        }
        out.report(ultra::approx_check(x, p, m));
        return out.exit_code();
    }
    // exhaustive over all truncated strings
    if (L > 16) fail(Errc::InvalidArgument, "exhaustive demo capped at L = 16; pass --x for longer strings");
    CheckReport rep;
    rep.check = "approx_check_exhaustive";
    rep.params = {{"p", std::to_string(p)}, {"m", std::to_string(m)}, {"L", std::to_string(L)}};
    rep.pass = true;
    auto t0 = std::chrono::steady_clock::now();
    for (unsigned long v = 0; v < (1UL << L); ++v) {
        CheckReport one = ultra::approx_check(ultra::binary_point(v, L), p, m);
        if (!one.pass) {
            rep.pass = false;
            rep.witnesses.insert(rep.witnesses.end(), one.witnesses.begin(), one.witnesses.end());
        }
    }
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.report(rep);
    return out.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylbkk: Weyl algebra arithmetic in positive characteristic, center restriction of "
                 "automorphisms, and multi-prime independence checks"};
    app.require_subcommand(1);

    std::string format = "human";
    bool strict = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "structured"}));
        sub->add_flag("--strict", strict, "treat precondition warnings as failures");
    };

    unsigned n = 1;
    long p = 0;
    unsigned long seed = 1;
    std::vector<long> primes;
    std::string morphism_path, word_path, xbits;
    unsigned m = 1, length = 0, count = 10, word_length = 3, degree_bound = 3;
    long coeff_bound = 2;
    bool do_untwist = false;
    bool subdominant = false;

    auto* vb = app.add_subcommand("verify-bracket", "Poisson bracket suite on the center");
    vb->add_option("--n", n, "number of Weyl pairs")->required();
    vb->add_option("--p", p, "prime characteristic")->required();
    vb->add_option("--seed", seed, "seed for the randomized part");
    add_common(vb);

    auto* fc = app.add_subcommand("fc", "center restriction of a morphism document");
    fc->add_option("--morphism", morphism_path, "morphism document path")->required();
    fc->add_option("--p", p, "prime (required for integer documents)");
    fc->add_flag("--untwist", do_untwist, "apply the inverse Frobenius to the coefficients");
    add_common(fc);

    auto* ind = app.add_subcommand("independence", "multi-prime independence report for a tame word");
    ind->add_option("--word", word_path, "word document path")->required();
    ind->add_option("--primes", primes, "primes to compare across")->delimiter(',');
    add_common(ind);

    auto* rs = app.add_subcommand("random-suite", "randomized independence/symplecticity/dominant suite");
    rs->add_option("--seed", seed, "base seed")->required();
    rs->add_option("--n", n, "number of Weyl pairs");
    rs->add_option("--words", count, "number of random words");
    rs->add_option("--word-length", word_length, "generators per word");
    rs->add_option("--degree-bound", degree_bound, "max degree of elementary potentials");
    rs->add_option("--coeff-bound", coeff_bound, "max |coefficient| in generators");
    rs->add_option("--primes", primes, "primes (default: chosen per word)")->delimiter(',');
    rs->add_flag("--subdominant", subdominant, "also record the experimental subdominant comparison");
    add_common(rs);

    auto* ud = app.add_subcommand("ultra-demo", "binary-decomposition approximation bound");
    ud->add_option("--p", p, "prime")->required();
    ud->add_option("--m", m, "prefix length to certify (needs p > 2^m)")->required();
    ud->add_option("--L", length, "truncation length (default: from p and m)");
    ud->add_option("--x", xbits, "specific bit string; exhaustive over all strings when absent");
    add_common(ud);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.structured = format == "structured";
    out.strict = strict;
    unsigned threads = thread_cap();

    try {
        if (vb->parsed()) return cmd_verify_bracket(n, p, seed, out);
        if (fc->parsed()) return cmd_fc(morphism_path, p, do_untwist, out);
        if (ind->parsed()) return cmd_independence(word_path, primes, threads, out);
        if (rs->parsed())
            return cmd_random_suite(seed, n, count, word_length, degree_bound, coeff_bound, primes,
                                    subdominant, threads, out);
        if (ud->parsed()) return cmd_ultra_demo(p, m, length, xbits, out);
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
