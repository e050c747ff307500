#include "cpm/numeric.hpp"

#include <cctype>
#include <ostream>

namespace cpm {

void Rational::canonicalize() {
    if (mpz_sgn(den_.get_mpz_t()) == 0)
        throw InvalidArgument("Rational: zero denominator");
    if (mpz_sgn(num_.get_mpz_t()) == 0) {
        den_ = 1;
        return;
    }
    if (mpz_sgn(den_.get_mpz_t()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(const Int& num, const Int& den) : num_(num), den_(den) {
    canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational literal with zero denominator: " + text);
    return Rational(num, den);
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

Rational Rational::pow2(long e) {
    Rational r;
    r.num_ = 1;
    if (e >= 0) {
        mpz_mul_2exp(r.num_.get_mpz_t(), r.num_.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.den_.get_mpz_t(), r.den_.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.canonicalize();
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    r.num_ = num_ * o.den_ - o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.canonicalize();
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.canonicalize();
    return r;
}

bool Rational::operator<(const Rational& o) const {
    // a/b < c/d  iff  a*d < c*b, both denominators positive
    return num_ * o.den_ < o.num_ * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational abs(const Rational& q) {
    return q.sgn() < 0 ? -q : q;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

Decimal to_decimal(const Rational& q, unsigned digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int n = ::abs(q.num());
    Int whole = n / q.den();
    Int rem = n % q.den();
    Int frac;
    Int frac_rem;
    mpz_tdiv_qr(frac.get_mpz_t(), frac_rem.get_mpz_t(), Int(rem * scale).get_mpz_t(),
                q.den().get_mpz_t());
    std::string fs = frac.get_str();
    if (fs.size() < digits) fs.insert(fs.begin(), digits - fs.size(), '0');
    std::string out;
    if (q.sgn() < 0) out += "-";
    out += whole.get_str();
    // Trim trailing zeros but keep at least one fractional digit for clarity.
    while (fs.size() > 1 && fs.back() == '0') fs.pop_back();
    if (!(fs == "0" && frac_rem == 0)) {
        out += "." + fs;
    }
    return Decimal{out, frac_rem == 0};
}

Int parse_int(const std::string& text) {
    std::string t = text;
    if (t.empty()) throw ParseError("empty integer literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ParseError("bad integer literal: " + text);
    for (std::size_t j = i; j < t.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(t[j])))
            throw ParseError("bad integer literal: " + text);
    }
    Int v;
    if (mpz_set_str(v.get_mpz_t(), t.c_str(), 10) != 0)
        throw ParseError("bad integer literal: " + text);
    return v;
}

Code parse_code(const std::string& text) {
    Int v = parse_int(text);
    if (v < 0) throw ParseError("expected a non-negative integer, got: " + text);
    return v;
}

}  // namespace cpm
