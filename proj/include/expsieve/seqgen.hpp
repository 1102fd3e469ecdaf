#pragma once

// Generators for the exponent sequence s_n and the coefficient sequence
// gamma_n. Coefficient randomness is counter-based (splitmix64 of seed+n),
// so outputs are independent of evaluation order and worker count.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "expsieve/base.hpp"

namespace expsieve::seqgen {

struct SequenceSpec {
    enum class Kind { identity, prime_power, file };
    Kind kind = Kind::identity;
    // rational exponent c = c_num/c_den for prime_power; 1 <= c <= 15/14
    i64 c_num = 1;
    i64 c_den = 1;
    std::string path;                 // file kind only
    std::optional<double> slack_nu;   // diagnostic only, never enforced
};

struct CoefficientSpec {
    enum class Kind { ones, unit_random, file };
    Kind kind = Kind::ones;
    u64 seed = 0;  // unit_random only
    std::string path;
};

// Fixed mixing function; pinned constants for cross-language reproducibility.
inline u64 splitmix64(u64 x) {
    u64 z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Exact floor(q^(num/den)) for q >= 1, num >= 1, den >= 1. Evaluated in long
// double with a near-integer guard: candidates within 1e-9 of an integer are
// settled by the exact comparison q^num vs m^den in multi-limb integers.
u64 floor_pow_rational(u64 q, i64 num, i64 den);

// s_1..s_T, validated strictly increasing positive.
std::vector<u64> gen_s(const SequenceSpec& spec, u64 T);

// gamma_1..gamma_T. unit_random draws gamma_n = exp(2*pi*i*u_n) with
// u_n = splitmix64(seed+n)/2^64.
std::vector<std::complex<double>> gen_gamma(const CoefficientSpec& spec, u64 T);

struct SparsityReport {
    double max_ratio;    // max over n of s_n / n^e
    bool within_bound;   // s_T <= T^e
};

SparsityReport sparsity_report(const std::vector<u64>& s, double e);

SequenceSpec parse_sequence_spec(const std::string& text);      // identity|primepow:C|file:PATH
CoefficientSpec parse_coefficient_spec(const std::string& text); // ones|random:SEED|file:PATH

}  // namespace expsieve::seqgen
