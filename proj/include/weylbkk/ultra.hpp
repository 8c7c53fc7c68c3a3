#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylbkk/bkk.hpp"

namespace weylbkk::ultra {

/// Truncated point of the Cantor set {0,1}^omega: bits at positions 1..L,
/// implicitly zero beyond L.
struct BitString {
    std::vector<uint8_t> bits;

    unsigned length() const { return static_cast<unsigned>(bits.size()); }
    bool operator==(const BitString&) const = default;
    std::string to_string() const;
};

/// Exact nonnegative rational with small terms; values here are 0 or 1/k.
struct Rational {
    long num = 0;
    long den = 1;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    std::string to_string() const;
};

/// Least-significant-bit-first binary decomposition of a into positions 1..L.
/// Requires a < 2^L.
BitString binary_point(unsigned long a, unsigned length);

/// 2-adic metric d_2(x,y) = 1/k with k the first differing position; 0 when
/// the truncated strings are equal.
Rational d2(const BitString& x, const BitString& y);

/// Nearest point of {e(0), ..., e(p-1)} to x, ties broken by the smallest
/// integer preimage. Requires p <= 2^L.
std::pair<unsigned long, BitString> nearest(const BitString& x, long p);

/// Asserts d_2(x, nearest(x,p)) < 1/m; valid whenever p > 2^m.
CheckReport approx_check(const BitString& x, long p, unsigned m);

} // namespace weylbkk::ultra
