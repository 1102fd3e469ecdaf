#pragma once

// Exact integer substrate: primes, factorization, divisors, tau/omega,
// modular powers and multiplicative orders. Everything here is exact
// 64-bit integer arithmetic; no floating point.

#include <utility>
#include <vector>

#include "expsieve/base.hpp"

namespace expsieve::arith {

// n together with its prime factorization, primes strictly increasing.
// n = 1 has an empty factor list.
struct FactoredInteger {
    u64 n = 1;
    std::vector<std::pair<u64, u32>> factors;  // (prime, exponent), exponent >= 1
};

// All primes in [2, limit], ascending. limit < 2 yields an empty list.
std::vector<u64> sieve_primes(u64 limit);

// Deterministic for all 64-bit inputs: trial division below 2^16, otherwise
// a strong-pseudoprime test with a proven base set.
bool is_prime(u64 n);

// Trial division by primes < 2^16, then Brent's variant of Pollard rho with
// batched gcds; every factor is certified prime. Requires 1 <= n < 2^63.
FactoredInteger factorize(u64 n);

std::vector<u64> divisors(const FactoredInteger& f);
u64 tau(const FactoredInteger& f);
u32 omega(const FactoredInteger& f);

// (a * b) mod m with a 128-bit intermediate.
inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

// base^exp mod m, m >= 2; negative bases are reduced into [0, m) first.
u64 powmod(i64 base, u64 exp, u64 m);

// Smallest t >= 1 with lambda^t == 1 (mod p). Computed by stripping prime
// factors from p-1 while the power stays 1. Throws if p | lambda.
u64 mult_order(u64 lambda, u64 p);

// Same, with the factorization of p-1 already in hand.
u64 mult_order_factored(u64 lambda, u64 p, const FactoredInteger& pm1);

// Smallest generator of (Z/p)^*; returns 1 for p = 2.
u64 primitive_root(u64 p);

}  // namespace expsieve::arith
