#pragma once

#include <random>

#include "cpm/numeric.hpp"

namespace cpm::testutil {

// Deterministic random rational with |num| <= max_num, 1 <= den <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(Int(num(rng)), Int(den(rng)));
}

inline Rational random_positive_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(Int(num(rng)), Int(den(rng)));
}

}  // namespace cpm::testutil
