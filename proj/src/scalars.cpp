#include "weylbkk/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace weylbkk {

namespace {

using u128 = unsigned __int128;

long mod_pos(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long mulmod(long a, long b, long p) {
    return static_cast<long>((u128)a * (u128)b % (u128)p);
}

long powmod(long a, long e, long p) {
    long r = 1 % p;
    a = mod_pos(a, p);
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(long n) {
    if (n < 2) return false;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    long d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

long next_prime(long n) {
    long c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

std::vector<long> primes_above(long n, int count) {
    std::vector<long> out;
    long c = n;
    while (static_cast<int>(out.size()) < count) {
        c = next_prime(c);
        out.push_back(c);
    }
    return out;
}

RingDescriptor RingDescriptor::prime_field(long p) {
    if (p < 2 || p > (1L << 31) || !is_prime(p))
        fail(Errc::InvalidArgument, "prime field modulus must be a prime < 2^31, got " + std::to_string(p));
    return {Kind::PrimeField, p};
}

RingDescriptor RingDescriptor::rational_functions(long p) {
    // Frobenius substitutes t -> t^p, which is dense in p; keep p small
    // enough that such polynomials stay addressable.
    if (p < 2 || p > (1L << 20) || !is_prime(p))
        fail(Errc::InvalidArgument, "rational function field characteristic must be a prime <= 2^20, got " +
                                        std::to_string(p));
    return {Kind::RationalFunctions, p};
}

std::string RingDescriptor::to_string() const {
    switch (kind) {
    case Kind::Integers: return "ZZ";
    case Kind::PrimeField: return "GF(" + std::to_string(p) + ")";
    case Kind::RationalFunctions: return "GF(" + std::to_string(p) + ")(t)";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c = mod_pos(c, p_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<long> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = mod_pos(c[i] + b.c_[i], a.p_);
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly FpPoly::operator-() const {
    std::vector<long> c(c_);
    for (auto& x : c) x = mod_pos(-x, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p_);
    std::vector<long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = mod_pos(c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
    return FpPoly(a.p_, std::move(c));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    long p = a.p_;
    std::vector<long> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {FpPoly::zero(p), a};
    std::vector<long> q(a.degree() - db + 1, 0);
    long lead_inv = powmod(b.leading(), p - 2, p);
    for (int i = a.degree(); i >= db; --i) {
        if (static_cast<int>(r.size()) <= i || r[i] == 0) continue;
        long f = mulmod(r[i], lead_inv, p);
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = mod_pos(r[i - db + j] - mulmod(f, b.c_[j], p), p);
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

FpPoly FpPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    long inv = powmod(leading(), p_ - 2, p_);
    std::vector<long> c(c_);
    for (auto& x : c) x = mulmod(x, inv, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::substitute_t_power(long k) const {
    if (is_zero()) return *this;
    std::vector<long> c(static_cast<size_t>(degree()) * k + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    return FpPoly(p_, std::move(c));
}

std::pair<bool, FpPoly> FpPoly::pth_root() const {
    if (is_zero()) return {true, *this};
    // Coefficients are fixed by Frobenius over F_p, so only exponents move.
    std::vector<long> c(degree() / p_ + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % p_ != 0) return {false, FpPoly::zero(p_)};
        c[i / p_] = c_[i];
    }
    return {true, FpPoly(p_, std::move(c))};
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        long c = c_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num_.p(), 1);
        return;
    }
    FpPoly g = FpPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = FpPoly::divmod(num_, g).first;
        den_ = FpPoly::divmod(den_, g).first;
    }
    if (den_.leading() != 1) {
        long p = num_.p();
        long inv = powmod(den_.leading(), p - 2, p);
        FpPoly scale = FpPoly::constant(p, inv);
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::integer(long v) { return integer(mpz_class(v)); }

Scalar Scalar::integer(mpz_class v) {
    return Scalar(RingDescriptor::integers(), std::move(v));
}

Scalar Scalar::residue(long v, long p) {
    RingDescriptor ring = RingDescriptor::prime_field(p);
    return Scalar(ring, mod_pos(v, p));
}

Scalar Scalar::rational(RatFunc f) {
    RingDescriptor ring = RingDescriptor::rational_functions(f.p());
    return Scalar(ring, std::move(f));
}

Scalar Scalar::rational(FpPoly num, FpPoly den) {
    return rational(RatFunc(std::move(num), std::move(den)));
}

Scalar Scalar::from_int(const RingDescriptor& ring, long v) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: return integer(v);
    case RingDescriptor::Kind::PrimeField: return Scalar(ring, mod_pos(v, ring.p));
    case RingDescriptor::Kind::RationalFunctions:
        return Scalar(ring, RatFunc(FpPoly::constant(ring.p, mod_pos(v, ring.p)),
                                    FpPoly::constant(ring.p, 1)));
    }
    fail(Errc::InvalidArgument, "bad ring");
}

bool Scalar::is_zero() const {
    switch (ring_.kind) {
    case RingDescriptor::Kind::Integers: return std::get<mpz_class>(v_) == 0;
    case RingDescriptor::Kind::PrimeField: return std::get<long>(v_) == 0;
    case RingDescriptor::Kind::RationalFunctions: return std::get<RatFunc>(v_).is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (ring_.kind) {
    case RingDescriptor::Kind::Integers: return std::get<mpz_class>(v_) == 1;
    case RingDescriptor::Kind::PrimeField: return std::get<long>(v_) == 1;
    case RingDescriptor::Kind::RationalFunctions: {
        const auto& f = std::get<RatFunc>(v_);
        return f.num().is_one() && f.den().is_one();
    }
    }
    return false;
}

const mpz_class& Scalar::integer_value() const {
    if (ring_.kind != RingDescriptor::Kind::Integers)
        fail(Errc::RingMismatch, "integer_value on non-integer scalar");
    return std::get<mpz_class>(v_);
}

long Scalar::residue_value() const {
    if (ring_.kind != RingDescriptor::Kind::PrimeField)
        fail(Errc::RingMismatch, "residue_value on non-prime-field scalar");
    return std::get<long>(v_);
}

const RatFunc& Scalar::rational_value() const {
    if (ring_.kind != RingDescriptor::Kind::RationalFunctions)
        fail(Errc::RingMismatch, "rational_value on non-rational-function scalar");
    return std::get<RatFunc>(v_);
}

namespace {
void require_same_ring(const Scalar& a, const Scalar& b) {
    if (a.ring() != b.ring())
        fail(Errc::RingMismatch, "operands in " + a.ring().to_string() + " and " + b.ring().to_string());
}
} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    switch (a.ring_.kind) {
    case RingDescriptor::Kind::Integers:
        return Scalar::integer(std::get<mpz_class>(a.v_) + std::get<mpz_class>(b.v_));
    case RingDescriptor::Kind::PrimeField:
        return Scalar(a.ring_, mod_pos(std::get<long>(a.v_) + std::get<long>(b.v_), a.ring_.p));
    case RingDescriptor::Kind::RationalFunctions: {
        const auto& x = std::get<RatFunc>(a.v_);
        const auto& y = std::get<RatFunc>(b.v_);
        return Scalar(a.ring_, RatFunc(x.num() * y.den() + y.num() * x.den(), x.den() * y.den()));
    }
    }
    fail(Errc::InvalidArgument, "bad ring");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
    switch (ring_.kind) {
    case RingDescriptor::Kind::Integers: return integer(-std::get<mpz_class>(v_));
    case RingDescriptor::Kind::PrimeField: return Scalar(ring_, mod_pos(-std::get<long>(v_), ring_.p));
    case RingDescriptor::Kind::RationalFunctions: {
        const auto& f = std::get<RatFunc>(v_);
        return Scalar(ring_, RatFunc(-f.num(), f.den()));
    }
    }
    fail(Errc::InvalidArgument, "bad ring");
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    switch (a.ring_.kind) {
    case RingDescriptor::Kind::Integers:
        return Scalar::integer(std::get<mpz_class>(a.v_) * std::get<mpz_class>(b.v_));
    case RingDescriptor::Kind::PrimeField:
        return Scalar(a.ring_, mulmod(std::get<long>(a.v_), std::get<long>(b.v_), a.ring_.p));
    case RingDescriptor::Kind::RationalFunctions: {
        const auto& x = std::get<RatFunc>(a.v_);
        const auto& y = std::get<RatFunc>(b.v_);
        return Scalar(a.ring_, RatFunc(x.num() * y.num(), x.den() * y.den()));
    }
    }
    fail(Errc::InvalidArgument, "bad ring");
}

Scalar Scalar::inv() const {
    switch (ring_.kind) {
    case RingDescriptor::Kind::Integers: {
        const auto& v = std::get<mpz_class>(v_);
        if (v == 0) fail(Errc::DivisionByZero, "inverse of zero");
        if (v != 1 && v != -1) fail(Errc::NoInverse, "integer " + v.get_str() + " is not a unit");
        return *this;
    }
    case RingDescriptor::Kind::PrimeField: {
        long v = std::get<long>(v_);
        if (v == 0) fail(Errc::DivisionByZero, "inverse of zero");
        return Scalar(ring_, powmod(v, ring_.p - 2, ring_.p));
    }
    case RingDescriptor::Kind::RationalFunctions: {
        const auto& f = std::get<RatFunc>(v_);
        if (f.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
        return Scalar(ring_, RatFunc(f.den(), f.num()));
    }
    }
    fail(Errc::InvalidArgument, "bad ring");
}

Scalar Scalar::frobenius() const {
    switch (ring_.kind) {
    case RingDescriptor::Kind::Integers:
        fail(Errc::NotPositiveCharacteristic, "frobenius over the integers");
    case RingDescriptor::Kind::PrimeField:
        return *this; // a^p = a by Fermat
    case RingDescriptor::Kind::RationalFunctions: {
        // (sum c_k t^k)^p = sum c_k t^(kp) over F_p.
        const auto& f = std::get<RatFunc>(v_);
        return Scalar(ring_, RatFunc(f.num().substitute_t_power(ring_.p),
                                     f.den().substitute_t_power(ring_.p)));
    }
    }
    fail(Errc::InvalidArgument, "bad ring");
}

Scalar Scalar::inverse_frobenius() const {
    switch (ring_.kind) {
    case RingDescriptor::Kind::Integers:
        fail(Errc::NotPositiveCharacteristic, "inverse frobenius over the integers");
    case RingDescriptor::Kind::PrimeField:
        return *this;
    case RingDescriptor::Kind::RationalFunctions: {
        const auto& f = std::get<RatFunc>(v_);
        auto [okn, rn] = f.num().pth_root();
        auto [okd, rd] = f.den().pth_root();
        if (!okn || !okd)
            fail(Errc::NotInFrobeniusImage, "(" + f.num().to_string() + ")/(" + f.den().to_string() +
                                                ") has no " + std::to_string(ring_.p) + "-th root");
        return Scalar(ring_, RatFunc(std::move(rn), std::move(rd)));
    }
    }
    fail(Errc::InvalidArgument, "bad ring");
}

std::string Scalar::to_string() const {
    switch (ring_.kind) {
    case RingDescriptor::Kind::Integers: return std::get<mpz_class>(v_).get_str();
    case RingDescriptor::Kind::PrimeField: return std::to_string(std::get<long>(v_));
    case RingDescriptor::Kind::RationalFunctions: {
        const auto& f = std::get<RatFunc>(v_);
        if (f.den().is_one()) {
            if (f.num().degree() <= 0) return f.num().to_string();
            return "(" + f.num().to_string() + ")";
        }
        return "(" + f.num().to_string() + ")/(" + f.den().to_string() + ")";
    }
    }
    return "?";
}

Scalar reduce_mod_p(const Scalar& a, long p) {
    if (a.ring().kind != RingDescriptor::Kind::Integers)
        fail(Errc::RingMismatch, "reduce_mod_p expects an integer scalar");
    mpz_class r = a.integer_value() % p;
    if (r < 0) r += p;
    return Scalar::residue(r.get_si(), p);
}

Scalar lift_to_integers(const Scalar& a) {
    if (a.ring().kind != RingDescriptor::Kind::PrimeField)
        fail(Errc::RingMismatch, "lift_to_integers expects a prime field scalar");
    return Scalar::integer(a.residue_value());
}

Scalar crt_reconstruct(const std::vector<Scalar>& residues) {
    if (residues.empty()) fail(Errc::EmptyInput, "no residues");
    mpz_class x = 0, m = 1;
    std::vector<long> seen;
    for (const auto& r : residues) {
        long p = r.ring().p;
        if (r.ring().kind != RingDescriptor::Kind::PrimeField)
            fail(Errc::RingMismatch, "crt residue not in a prime field");
        if (std::find(seen.begin(), seen.end(), p) != seen.end())
            fail(Errc::InvalidArgument, "repeated modulus " + std::to_string(p));
        seen.push_back(p);
        // x' = x + m * ((r - x) * m^-1 mod p)
        mpz_class delta = (r.residue_value() - x) % p;
        if (delta < 0) delta += p;
        mpz_class minv;
        mpz_class mp = m % p;
        if (mpz_invert(minv.get_mpz_t(), mp.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
            fail(Errc::InvalidArgument, "moduli not coprime");
        x += m * ((delta * minv) % p);
        m *= p;
        x %= m;
    }
    // symmetric range (-M/2, M/2]
    if (2 * x > m) x -= m;
    return Scalar::integer(x);
}

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotPositiveCharacteristic: return "NotPositiveCharacteristic";
    case Errc::NotInFrobeniusImage: return "NotInFrobeniusImage";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::Mismatch: return "Mismatch";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotDivisibleByP: return "NotDivisibleByP";
    case Errc::NotCentralResult: return "NotCentralResult";
    case Errc::RelationViolation: return "RelationViolation";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::ParseError: return "ParseError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LiteralNotInRing: return "LiteralNotInRing";
    case Errc::Overflow: return "Overflow";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace weylbkk
