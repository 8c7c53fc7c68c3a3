#include "weylbkk/ultra.hpp"

#include <chrono>

namespace weylbkk::ultra {

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::string Rational::to_string() const {
    if (num == 0) return "0";
    return std::to_string(num) + "/" + std::to_string(den);
}

BitString binary_point(unsigned long a, unsigned length) {
    if (length < 1 || length > 62) fail(Errc::InvalidArgument, "truncation length must be in [1, 62]");
    if (a >= (1UL << length))
        fail(Errc::Overflow, std::to_string(a) + " does not fit in " + std::to_string(length) + " bits");
    BitString x;
    x.bits.resize(length);
    for (unsigned k = 0; k < length; ++k) x.bits[k] = static_cast<uint8_t>((a >> k) & 1UL);
    return x;
}

Rational d2(const BitString& x, const BitString& y) {
    if (x.length() != y.length()) fail(Errc::Mismatch, "bit strings of different truncation length");
    for (unsigned k = 0; k < x.length(); ++k)
        if (x.bits[k] != y.bits[k]) return Rational{1, static_cast<long>(k) + 1};
    return Rational{0, 1};
}

std::pair<unsigned long, BitString> nearest(const BitString& x, long p) {
    if (p < 1) fail(Errc::InvalidArgument, "need p >= 1");
    const unsigned L = x.length();
    if (L < 62 && static_cast<unsigned long>(p) > (1UL << L))
        fail(Errc::Overflow, "p exceeds 2^L; points e(a) would not fit");
    // Maximize the first differing position; ties keep the smaller preimage.
    unsigned long best_a = 0;
    unsigned best_k = 0;
    for (unsigned long a = 0; a < static_cast<unsigned long>(p); ++a) {
        unsigned k = 0;
        while (k < L && ((a >> k) & 1UL) == x.bits[k]) ++k;
        if (a == 0 || k > best_k) {
            best_a = a;
            best_k = k;
            if (k == L) break; // exact match
        }
    }
    return {best_a, binary_point(best_a, L)};
}

CheckReport approx_check(const BitString& x, long p, unsigned m) {
    auto t0 = std::chrono::steady_clock::now();
    if (m < 1) fail(Errc::InvalidArgument, "need m >= 1");
    if (m >= 62 || p <= (1L << m))
        fail(Errc::PreconditionViolated,
             "need p > 2^m (p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")");
    if (m > x.length()) fail(Errc::PreconditionViolated, "need 2^m <= 2^L");

    auto [a, e] = nearest(x, p);
    Rational d = d2(x, e);
    CheckReport rep;
    rep.check = "approx_check";
    rep.params = {{"p", std::to_string(p)}, {"m", std::to_string(m)}, {"x", x.to_string()}};
    rep.pass = d < Rational{1, static_cast<long>(m)};
    if (!rep.pass)
        rep.witnesses.push_back("nearest is e(" + std::to_string(a) + ") = " + e.to_string() +
                                " at distance " + d.to_string());
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace weylbkk::ultra
