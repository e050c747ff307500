#pragma once

#include <array>
#include <optional>
#include <utility>

#include "cpm/factor.hpp"
#include "cpm/numeric.hpp"

// Codings between non-negative integers and pairs, triples, signed
// integers, rationals and open rational intervals. Every operation is a
// pure function; all of them are exact at any magnitude.
namespace cpm::encoding {

// Cantor pairing <x,y> = (x^2 + 2xy + y^2 + 3x + y)/2, a bijection N^2 -> N.
Code pair(const Code& x, const Code& y);

// Inverse of pair; defined for every non-negative code.
std::pair<Code, Code> unpair(const Code& c);

// <x,y,z> = <<x,y>,z>.
Code triple(const Code& x, const Code& y, const Code& z);
std::array<Code, 3> untriple(const Code& c);

// zeta(i) = 2i for i >= 0, -2i-1 for i < 0: a bijection Z -> N.
Code zeta(const Int& i);
Int zeta_inv(const Code& c);

// Rational coding: for a/b in lowest terms with b > 0,
//   rho(a/b) = zeta((sgn a) * 2^zeta(a1-b1) * 3^zeta(a2-b2) * ...)
// where a_i, b_i are the prime exponents of |a| and b. sgn 0 = 0, so
// rho(0) = zeta(0) = 0.
Code rho(const Rational& q);

// Inverse of rho. Decoding factors the inner value, so codes whose inner
// value resists the factorization budget raise FactorizationOverflow.
Rational rho_inv(const Code& c, const FactorLimits& limits = {});
std::optional<Rational> try_rho_inv(const Code& c, const FactorLimits& limits = {});

// Open-interval coding (q;r) = pair(rho(q), rho(r)), requiring q < r.
Code interval_code(const Rational& q, const Rational& r);

// Decodes (q, r); InvalidCode when the code does not denote q < r.
std::pair<Rational, Rational> interval_decode(const Code& c, const FactorLimits& limits = {});
std::optional<std::pair<Rational, Rational>> try_interval_decode(
    const Code& c, const FactorLimits& limits = {});

}  // namespace cpm::encoding
