#pragma once

#include <gmpxx.h>

#include <string>

#include "cpm/errors.hpp"

namespace cpm {

// Arbitrary-precision signed integer. GMP never overflows silently, which
// is the property the codes rely on.
using Int = mpz_class;

// A Code is a non-negative Int used as the universal carrier for pairs,
// triples, signed integers, rationals and intervals. Encoders only ever
// produce non-negative values; decoders validate.
using Code = mpz_class;

// Exact rational number, always kept canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Comparisons and arithmetic are exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    explicit Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(const Int& num, const Int& den);

    // Accepts "a", "-a", "a/b" with unbounded decimal digits.
    static Rational parse(const std::string& text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return mpz_sgn(num_.get_mpz_t()); }

    // Largest integer <= this (floor, exact for negatives too).
    Int floor() const;

    // 2^e as an exact rational; e may be negative.
    static Rational pow2(long e);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // "a" for integers, "a/b" otherwise; parse() round-trips it.
    std::string str() const;

private:
    Int num_;
    Int den_;

    void canonicalize();
};

Rational abs(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Decimal rendering of a rational, truncated toward zero after `digits`
// fractional digits. `exact` is true when nothing was cut off.
struct Decimal {
    std::string text;
    bool exact;
};

Decimal to_decimal(const Rational& q, unsigned digits = 12);

// Strict decimal-integer parsers; ParseError on anything else.
Int parse_int(const std::string& text);
Code parse_code(const std::string& text);  // additionally requires value >= 0

}  // namespace cpm
