#pragma once

#include <vector>

#include "cpm/numeric.hpp"

namespace cpm {

struct PrimePower {
    Int prime;
    unsigned long exponent;

    bool operator==(const PrimePower& o) const {
        return prime == o.prime && exponent == o.exponent;
    }
};

// Effort budget for factorization. Values whose factorization does not
// complete within the budget raise FactorizationOverflow; callers with
// unusual inputs can raise the budget instead of looping forever.
struct FactorLimits {
    unsigned long trial_limit = 10000;          // trial division by primes below this
    unsigned long long pollard_budget = 40'000'000;  // total rho iterations
};

// Prime factorization of n >= 1, primes ascending. n = 1 gives {}.
// Trial division by small primes, perfect-power reduction, then
// Pollard-Brent splitting under the iteration budget.
std::vector<PrimePower> factorize(const Int& n, const FactorLimits& limits = {});

bool is_probable_prime(const Int& n);

}  // namespace cpm
