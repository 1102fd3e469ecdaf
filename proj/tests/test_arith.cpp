#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "expsieve/arith.hpp"
#include "oracles.hpp"

using namespace expsieve;
using namespace expsieve::arith;

TEST_CASE("sieve matches trial division") {
    const auto primes = sieve_primes(1000);
    std::vector<u64> expected;
    for (u64 n = 2; n <= 1000; ++n)
        if (oracles::naive_is_prime(n)) expected.push_back(n);
    CHECK(primes == expected);
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(2) == std::vector<u64>{2});
}

TEST_CASE("is_prime agrees with trial division and handles large inputs") {
    for (u64 n = 0; n < 2000; ++n) CHECK(is_prime(n) == oracles::naive_is_prime(n));
    CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1, Mersenne prime
    CHECK(!is_prime(2305843009213693953ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK(!is_prime(18446744073709551555ULL));
}

TEST_CASE("factorize reconstructs n with prime factors in order") {
    for (u64 n = 1; n <= 3000; ++n) {
        const auto f = factorize(n);
        u64 prod = 1;
        u64 last = 0;
        for (auto [p, e] : f.factors) {
            CHECK(oracles::naive_is_prime(p));
            CHECK(p > last);
            last = p;
            for (u64 k = 0; k < e; ++k) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("factorize handles semiprimes beyond the trial range") {
    const u64 p = 1000003, q = 1000033;
    const auto f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<u64, u32>{p, 1});
    CHECK(f.factors[1] == std::pair<u64, u32>{q, 1});

    const auto sq = factorize(p * p);
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0] == std::pair<u64, u32>{p, 2});
}

TEST_CASE("factorize rejects out-of-domain input") {
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    CHECK_THROWS_AS(factorize(u64(1) << 63), std::domain_error);
}

TEST_CASE("tau and omega and divisors") {
    for (u64 n = 1; n <= 500; ++n) {
        const auto f = factorize(n);
        CHECK(tau(f) == oracles::naive_tau(n));
        const auto divs = divisors(f);
        CHECK(divs.size() == oracles::naive_tau(n));
        CHECK(std::is_sorted(divs.begin(), divs.end()));
        for (u64 d : divs) CHECK(n % d == 0);
    }
    CHECK(tau(factorize(1)) == 1);
    CHECK(omega(factorize(1)) == 0);
    CHECK(omega(factorize(360)) == 3);
}

TEST_CASE("powmod basics and negative base reduction") {
    CHECK(powmod(3, 0, 7) == 1);
    CHECK(powmod(3, 6, 7) == 1);
    CHECK(powmod(-1, 3, 7) == 6);
    CHECK(powmod(10, 18446744073709551615ULL, 2) == 0);
    // Fermat at word scale
    const u64 p = 18446744073709551557ULL;
    CHECK(powmod(2, p - 1, p) == 1);
}

TEST_CASE("mult_order matches brute force and divides p-1") {
    for (u64 p : sieve_primes(300)) {
        for (u64 lambda = 2; lambda <= 12; ++lambda) {
            if (lambda % p == 0) continue;
            const u64 t = mult_order(lambda, p);
            CHECK(t == oracles::naive_order(lambda, p));
            CHECK((p - 1) % t == 0);
        }
    }
    CHECK(mult_order(3, 2) == 1);
    CHECK_THROWS_AS(mult_order(10, 5), std::domain_error);
}

TEST_CASE("mult_order_factored agrees with mult_order") {
    for (u64 p : sieve_primes(500)) {
        if (p == 2) continue;
        const auto pm1 = factorize(p - 1);
        CHECK(mult_order_factored(2, p, pm1) == mult_order(2, p));
    }
}

TEST_CASE("primitive_root generates the full group") {
    for (u64 p : sieve_primes(200)) {
        const u64 g = primitive_root(p);
        if (p == 2) {
            CHECK(g == 1);
            continue;
        }
        CHECK(mult_order(g, p) == p - 1);
    }
}

TEST_CASE("known orders for lambda=2 up to 20") {
    // p: 3,5,7,11,13,17,19 -> 2,4,3,10,12,8,18
    const std::vector<std::pair<u64, u64>> expected{{3, 2},  {5, 4},   {7, 3},  {11, 10},
                                                    {13, 12}, {17, 8}, {19, 18}};
    for (auto [p, t] : expected) CHECK(mult_order(2, p) == t);
}
