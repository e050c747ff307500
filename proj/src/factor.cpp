#include "cpm/factor.hpp"

#include <algorithm>
#include <map>

namespace cpm {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> sieve = [] {
        const unsigned long n = 65536;
        std::vector<bool> composite(n, false);
        std::vector<unsigned long> primes;
        for (unsigned long p = 2; p < n; ++p) {
            if (composite[p]) continue;
            primes.push_back(p);
            for (unsigned long q = p * p; q < n; q += p) composite[q] = true;
        }
        return primes;
    }();
    return sieve;
}

// Pollard's rho, Brent variant, on multiprecision values. Deterministic:
// the random walk is seeded from n so repeated runs agree. Returns a
// nontrivial factor of composite n, or throws when the budget runs out.
Int pollard_brent(const Int& n, unsigned long long& budget) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(Int(n ^ Int(0x9e3779b97f4a7c15UL)));
    while (budget > 0) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x, ys, q = 1, g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                const unsigned long steps = std::min(m, r - k);
                for (unsigned long i = 0; i < steps && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                    --budget;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // Batched gcd overshot; backtrack one step at a time.
            g = 1;
            while (g == 1 && budget > 0) {
                ys = (ys * ys + c) % n;
                --budget;
                Int d = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != 1 && g != n) return g;
        // Unlucky constant; retry with a fresh walk while budget lasts.
    }
    throw FactorizationOverflow("factorize: effort budget exhausted on a " +
                                std::to_string(mpz_sizeinbase(n.get_mpz_t(), 2)) +
                                "-bit cofactor");
}

void split(const Int& n, unsigned long multiplicity, std::map<Int, unsigned long>& out,
           unsigned long long& budget) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += multiplicity;
        return;
    }
    // Perfect powers p^k collapse to their root before rho sees them;
    // rho alone degenerates on squares of primes.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        const auto& primes = small_primes();
        for (unsigned long k : primes) {
            if (k > mpz_sizeinbase(n.get_mpz_t(), 2)) break;
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                split(root, multiplicity * k, out, budget);
                return;
            }
        }
    }
    Int d = pollard_brent(n, budget);
    split(d, multiplicity, out, budget);
    split(Int(n / d), multiplicity, out, budget);
}

}  // namespace

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::vector<PrimePower> factorize(const Int& n, const FactorLimits& limits) {
    if (n < 1) throw InvalidArgument("factorize: argument must be >= 1");
    std::vector<PrimePower> out;
    if (n == 1) return out;

    Int rest = n;
    // Powers of two come off with a single scan.
    const mp_bitcnt_t twos = mpz_scan1(rest.get_mpz_t(), 0);
    if (twos > 0) {
        out.push_back({Int(2), static_cast<unsigned long>(twos)});
        mpz_fdiv_q_2exp(rest.get_mpz_t(), rest.get_mpz_t(), twos);
    }
    if (rest == 1) return out;

    for (unsigned long p : small_primes()) {
        if (p < 3) continue;
        if (p >= limits.trial_limit) break;
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned long e = 0;
        do {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
        out.push_back({Int(p), e});
    }
    if (rest != 1) {
        std::map<Int, unsigned long> big;
        unsigned long long budget = limits.pollard_budget;
        split(rest, 1, big, budget);
        for (auto& [p, e] : big) out.push_back({p, e});
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

}  // namespace cpm
