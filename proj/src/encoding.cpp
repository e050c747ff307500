#include "cpm/encoding.hpp"

namespace cpm::encoding {

namespace {

void require_code(const Int& v, const char* where) {
    if (v < 0) throw InvalidCode(std::string(where) + ": negative value is not a code");
}

}  // namespace

Code pair(const Code& x, const Code& y) {
    require_code(x, "pair");
    require_code(y, "pair");
    // (x^2 + 2xy + y^2 + 3x + y)/2 = s(s+1)/2 + x with s = x + y.
    Code s = x + y;
    Code t = s * (s + 1);
    mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
    return t + x;
}

std::pair<Code, Code> unpair(const Code& c) {
    require_code(c, "unpair");
    // s = floor((sqrt(8c+1) - 1)/2) is the diagonal index.
    Code s = 8 * c + 1;
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    s = (s - 1) / 2;
    Code base = s * (s + 1);
    mpz_fdiv_q_2exp(base.get_mpz_t(), base.get_mpz_t(), 1);
    Code x = c - base;
    Code y = s - x;
    return {x, y};
}

Code triple(const Code& x, const Code& y, const Code& z) {
    return pair(pair(x, y), z);
}

std::array<Code, 3> untriple(const Code& c) {
    auto [xy, z] = unpair(c);
    auto [x, y] = unpair(xy);
    return {x, y, z};
}

Code zeta(const Int& i) {
    if (i >= 0) return 2 * i;
    return -2 * i - 1;
}

Int zeta_inv(const Code& c) {
    require_code(c, "zeta_inv");
    if (mpz_even_p(c.get_mpz_t())) return c / 2;
    return -((c + 1) / 2);
}

Code rho(const Rational& q) {
    if (q.is_zero()) return 0;
    auto num_factors = factorize(::abs(q.num()));
    auto den_factors = factorize(q.den());
    Int inner = 1;
    std::size_t i = 0, j = 0;
    auto apply = [&inner](const Int& prime, long diff) {
        Int pw;
        Code z = zeta(Int(diff));
        mpz_pow_ui(pw.get_mpz_t(), prime.get_mpz_t(), z.get_ui());
        inner *= pw;
    };
    while (i < num_factors.size() || j < den_factors.size()) {
        if (j == den_factors.size() ||
            (i < num_factors.size() && num_factors[i].prime < den_factors[j].prime)) {
            apply(num_factors[i].prime, static_cast<long>(num_factors[i].exponent));
            ++i;
        } else if (i == num_factors.size() || den_factors[j].prime < num_factors[i].prime) {
            apply(den_factors[j].prime, -static_cast<long>(den_factors[j].exponent));
            ++j;
        } else {
            // Lowest terms: numerator and denominator share no prime.
            throw InvalidArgument("rho: rational not in lowest terms");
        }
    }
    if (q.sgn() < 0) inner = -inner;
    return zeta(inner);
}

std::optional<Rational> try_rho_inv(const Code& c, const FactorLimits& limits) {
    require_code(c, "rho_inv");
    Int inner = zeta_inv(c);
    if (inner == 0) return Rational();  // only c = zeta(0) = 0 lands here
    const int sign = mpz_sgn(inner.get_mpz_t());
    Int num = 1, den = 1;
    for (const auto& [prime, exponent] : factorize(::abs(inner), limits)) {
        Int diff = zeta_inv(Int(exponent));
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), prime.get_mpz_t(), Int(::abs(diff)).get_ui());
        if (diff > 0) {
            num *= pw;
        } else {
            den *= pw;
        }
    }
    if (sign < 0) num = -num;
    return Rational(num, den);
}

Rational rho_inv(const Code& c, const FactorLimits& limits) {
    auto q = try_rho_inv(c, limits);
    if (!q) throw InvalidCode("rho_inv: " + c.get_str() + " is not a rational code");
    return *q;
}

Code interval_code(const Rational& q, const Rational& r) {
    if (!(q < r))
        throw InvalidEndpoints("interval_code: endpoints must satisfy q < r, got (" + q.str() +
                               ";" + r.str() + ")");
    return pair(rho(q), rho(r));
}

std::optional<std::pair<Rational, Rational>> try_interval_decode(const Code& c,
                                                                 const FactorLimits& limits) {
    require_code(c, "interval_decode");
    auto [cq, cr] = unpair(c);
    auto q = try_rho_inv(cq, limits);
    auto r = try_rho_inv(cr, limits);
    if (!q || !r || !(*q < *r)) return std::nullopt;
    return std::make_pair(*q, *r);
}

std::pair<Rational, Rational> interval_decode(const Code& c, const FactorLimits& limits) {
    auto qr = try_interval_decode(c, limits);
    if (!qr) throw InvalidCode("interval_decode: " + c.get_str() + " is not an interval code");
    return *qr;
}

}  // namespace cpm::encoding
