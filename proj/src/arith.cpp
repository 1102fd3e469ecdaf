#include "expsieve/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace expsieve::arith {

std::vector<u64> sieve_primes(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    // byte sieve over odd numbers; 2 handled separately
    u64 half = (limit - 1) / 2;  // count of odd numbers 3,5,... <= limit
    std::vector<std::uint8_t> composite(half + 1, 0);
    for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i]) continue;
        u64 p = 2 * i + 1;
        for (u64 j = (p * p - 1) / 2; j <= half; j += p) composite[j] = 1;
    }
    primes.reserve(half / 8 + 8);
    primes.push_back(2);
    for (u64 i = 1; i <= half; ++i)
        if (!composite[i]) primes.push_back(2 * i + 1);
    return primes;
}

u64 powmod(i64 base, u64 exp, u64 m) {
    u64 b = static_cast<u64>(((base % static_cast<i64>(m)) + static_cast<i64>(m))) % m;
    u64 result = 1 % m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, b, m);
        b = mulmod(b, b, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool is_prime_trial(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Strong-pseudoprime test to base a; n odd, n > 2.
bool sprp(u64 n, u64 a) {
    a %= n;
    if (a == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(static_cast<i64>(a), d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Primes below 2^16, shared by factorize(); built once, read-only after.
const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = sieve_primes((1u << 16) - 1);
    return primes;
}

u64 brent_rho(u64 n, u64 c, u64 x0) {
    // Brent's cycle detection with gcds batched over 128 steps.
    u64 y = x0, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 batch = 128;
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min(batch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod(y, y, n) + c) % n;
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += batch;
        }
        r <<= 1;
    } while (g == 1);
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (mulmod(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_recursive(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = n;
    for (u64 c = 1; d == n; ++c) d = brent_rho(n, c, 2);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < (1u << 16)) return is_prime_trial(n);
    if ((n & 1) == 0) return false;
    // Proven deterministic base set for all n < 2^64.
    static constexpr std::array<u64, 7> bases = {2,      325,    9375,      28178,
                                                 450775, 9780504, 1795265022};
    for (u64 a : bases)
        if (!sprp(n, a)) return false;
    return true;
}

FactoredInteger factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    if (n >= (static_cast<u64>(1) << 63)) throw std::domain_error("factorize: n must be < 2^63");
    FactoredInteger f;
    f.n = n;
    if (n == 1) return f;

    std::vector<u64> primes_found;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        while (n % p == 0) {
            primes_found.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        if (n < (static_cast<u64>(1) << 32) || is_prime(n)) {
            primes_found.push_back(n);
        } else {
            factor_recursive(n, primes_found);
        }
    }
    std::sort(primes_found.begin(), primes_found.end());
    for (u64 p : primes_found) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second += 1;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

std::vector<u64> divisors(const FactoredInteger& f) {
    std::vector<u64> divs{1};
    for (auto [p, e] : f.factors) {
        std::size_t base_count = divs.size();
        u64 pk = 1;
        for (u32 k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base_count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 tau(const FactoredInteger& f) {
    u64 t = 1;
    for (auto [p, e] : f.factors) t *= (e + 1);
    return t;
}

u32 omega(const FactoredInteger& f) { return static_cast<u32>(f.factors.size()); }

u64 mult_order(u64 lambda, u64 p) {
    if (lambda % p == 0)
        throw std::domain_error("mult_order: order undefined, p divides lambda");
    if (p == 2) return 1;
    return mult_order_factored(lambda, p, factorize(p - 1));
}

u64 mult_order_factored(u64 lambda, u64 p, const FactoredInteger& pm1) {
    if (lambda % p == 0)
        throw std::domain_error("mult_order: order undefined, p divides lambda");
    u64 t = pm1.n;
    for (auto [q, e] : pm1.factors) {
        (void)e;
        while (t % q == 0 && powmod(static_cast<i64>(lambda % p), t / q, p) == 1) t /= q;
    }
    return t;
}

u64 primitive_root(u64 p) {
    if (p == 2) return 1;
    FactoredInteger f = factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : f.factors) {
            (void)e;
            if (powmod(static_cast<i64>(g), (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::domain_error("primitive_root: p is not prime");
}

}  // namespace expsieve::arith
