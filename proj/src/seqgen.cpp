#include "expsieve/seqgen.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "expsieve/arith.hpp"

namespace expsieve::seqgen {

namespace {

// Little-endian multi-limb unsigned integer, only what the exactness guard
// needs: q^k construction and comparison.
using BigUInt = std::vector<u64>;

void big_mul_u64(BigUInt& a, u64 m) {
    u128 carry = 0;
    for (auto& limb : a) {
        u128 prod = static_cast<u128>(limb) * m + carry;
        limb = static_cast<u64>(prod);
        carry = prod >> 64;
    }
    while (carry) {
        a.push_back(static_cast<u64>(carry));
        carry >>= 64;
    }
}

BigUInt big_pow(u64 base, i64 exp) {
    BigUInt r{1};
    for (i64 i = 0; i < exp; ++i) big_mul_u64(r, base);
    return r;
}

int big_cmp(const BigUInt& a, const BigUInt& b) {
    std::size_t na = a.size(), nb = b.size();
    while (na > 0 && a[na - 1] == 0) --na;
    while (nb > 0 && b[nb - 1] == 0) --nb;
    if (na != nb) return na < nb ? -1 : 1;
    for (std::size_t i = na; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// n-th prime numbers q_1..q_T via a sieve with the usual p_n upper bound.
std::vector<u64> first_primes(u64 T) {
    if (T == 0) return {};
    double n = static_cast<double>(T);
    u64 bound = 16;
    if (T >= 6) {
        double b = n * (std::log(n) + std::log(std::log(n)));
        bound = static_cast<u64>(b * 1.1) + 16;
    } else {
        bound = 16;
    }
    for (;;) {
        auto primes = arith::sieve_primes(bound);
        if (primes.size() >= T) {
            primes.resize(T);
            return primes;
        }
        bound *= 2;
    }
}

std::vector<u64> read_sequence_file(const std::string& path, u64 T) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open sequence file: " + path);
    std::vector<u64> s;
    s.reserve(T);
    long long value;
    while (s.size() < T && (in >> value)) {
        if (value <= 0)
            throw validation_error("sequence file: entry " + std::to_string(s.size() + 1) +
                                   " is not a positive integer");
        s.push_back(static_cast<u64>(value));
    }
    if (s.size() < T)
        throw validation_error("sequence file: " + path + " has only " +
                               std::to_string(s.size()) + " entries, need " + std::to_string(T));
    return s;
}

void validate_increasing(const std::vector<u64>& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] <= s[i - 1])
            throw validation_error("sequence not strictly increasing at index " +
                                   std::to_string(i + 1));
    }
    if (!s.empty() && s[0] == 0) throw validation_error("sequence entries must be positive");
}

constexpr double kUnitModulusSlack = 1e-12;
constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

u64 floor_pow_rational(u64 q, i64 num, i64 den) {
    if (q == 0 || num < 1 || den < 1) throw validation_error("floor_pow_rational: bad arguments");
    if (q == 1) return 1;
    long double x = std::pow(static_cast<long double>(q),
                             static_cast<long double>(num) / static_cast<long double>(den));
    long double nearest = std::floor(x + 0.5L);
    long double guard = 1e-9L * std::max<long double>(1.0L, x);
    if (std::fabs(x - nearest) <= guard) {
        // Boundary case: decide floor(q^(num/den)) vs nearest integer m
        // exactly, via q^num >= m^den.
        u64 m = static_cast<u64>(nearest);
        if (m == 0) return 0;
        int cmp = big_cmp(big_pow(q, num), big_pow(m, den));
        return cmp >= 0 ? m : m - 1;
    }
    return static_cast<u64>(std::floor(x));
}

std::vector<u64> gen_s(const SequenceSpec& spec, u64 T) {
    if (T < 1) throw validation_error("gen_s: T must be >= 1");
    std::vector<u64> s;
    switch (spec.kind) {
        case SequenceSpec::Kind::identity:
            s.resize(T);
            for (u64 n = 0; n < T; ++n) s[n] = n + 1;
            break;
        case SequenceSpec::Kind::prime_power: {
            // 1 <= c <= 15/14
            if (spec.c_den < 1 || spec.c_num < spec.c_den ||
                14 * spec.c_num > 15 * spec.c_den)
                throw validation_error("prime_power exponent c must satisfy 1 <= c <= 15/14");
            std::vector<u64> q = first_primes(T);
            s.resize(T);
            for (u64 n = 0; n < T; ++n) s[n] = floor_pow_rational(q[n], spec.c_num, spec.c_den);
            break;
        }
        case SequenceSpec::Kind::file:
            s = read_sequence_file(spec.path, T);
            break;
    }
    validate_increasing(s);
    return s;
}

std::vector<std::complex<double>> gen_gamma(const CoefficientSpec& spec, u64 T) {
    if (T < 1) throw validation_error("gen_gamma: T must be >= 1");
    std::vector<std::complex<double>> g(T);
    switch (spec.kind) {
        case CoefficientSpec::Kind::ones:
            for (auto& z : g) z = 1.0;
            break;
        case CoefficientSpec::Kind::unit_random:
            for (u64 n = 1; n <= T; ++n) {
                double u = static_cast<double>(splitmix64(spec.seed + n)) * 0x1.0p-64;
                double phase = kTwoPi * u;
                g[n - 1] = std::complex<double>(std::cos(phase), std::sin(phase));
            }
            break;
        case CoefficientSpec::Kind::file: {
            std::ifstream in(spec.path);
            if (!in) throw io_error("cannot open coefficient file: " + spec.path);
            double re, im;
            u64 n = 0;
            while (n < T && (in >> re >> im)) {
                std::complex<double> z(re, im);
                if (std::abs(z) > 1.0 + kUnitModulusSlack)
                    throw validation_error("coefficient file: |gamma_" + std::to_string(n + 1) +
                                           "| exceeds 1");
                g[n++] = z;
            }
            if (n < T)
                throw validation_error("coefficient file: " + spec.path + " has only " +
                                       std::to_string(n) + " entries, need " + std::to_string(T));
            break;
        }
    }
    return g;
}

SparsityReport sparsity_report(const std::vector<u64>& s, double e) {
    if (s.empty()) throw validation_error("sparsity_report: empty sequence");
    if (e < 1.0) throw validation_error("sparsity_report: exponent must be >= 1");
    double max_ratio = 0.0;
    for (std::size_t n = 1; n <= s.size(); ++n) {
        double r = static_cast<double>(s[n - 1]) / std::pow(static_cast<double>(n), e);
        if (r > max_ratio) max_ratio = r;
    }
    double T = static_cast<double>(s.size());
    bool within = static_cast<double>(s.back()) <= std::pow(T, e);
    return {max_ratio, within};
}

namespace {

// "15/14" or a plain decimal like "1.071" -> exact rational.
std::pair<i64, i64> parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            i64 num = std::stoll(text.substr(0, slash));
            i64 den = std::stoll(text.substr(slash + 1));
            if (den <= 0) throw validation_error("rational with nonpositive denominator: " + text);
            return {num, den};
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return {std::stoll(text), 1};
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (frac_len > 17) throw validation_error("decimal exponent too long: " + text);
        i64 den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return {std::stoll(digits), den};
    } catch (const std::logic_error&) {
        throw validation_error("cannot parse rational: " + text);
    }
}

}  // namespace

SequenceSpec parse_sequence_spec(const std::string& text) {
    SequenceSpec spec;
    if (text == "identity") {
        spec.kind = SequenceSpec::Kind::identity;
    } else if (text.rfind("primepow:", 0) == 0) {
        spec.kind = SequenceSpec::Kind::prime_power;
        auto [num, den] = parse_rational(text.substr(9));
        spec.c_num = num;
        spec.c_den = den;
        if (spec.c_num < spec.c_den || 14 * spec.c_num > 15 * spec.c_den)
            throw validation_error("primepow exponent must satisfy 1 <= c <= 15/14, got " +
                                   text.substr(9));
    } else if (text.rfind("file:", 0) == 0) {
        spec.kind = SequenceSpec::Kind::file;
        spec.path = text.substr(5);
        if (spec.path.empty()) throw validation_error("file: sequence spec needs a path");
    } else {
        throw validation_error("unknown sequence spec: " + text);
    }
    return spec;
}

CoefficientSpec parse_coefficient_spec(const std::string& text) {
    CoefficientSpec spec;
    if (text == "ones") {
        spec.kind = CoefficientSpec::Kind::ones;
    } else if (text.rfind("random:", 0) == 0) {
        spec.kind = CoefficientSpec::Kind::unit_random;
        try {
            spec.seed = std::stoull(text.substr(7));
        } catch (const std::logic_error&) {
            throw validation_error("cannot parse coefficient seed: " + text);
        }
    } else if (text.rfind("file:", 0) == 0) {
        spec.kind = CoefficientSpec::Kind::file;
        spec.path = text.substr(5);
        if (spec.path.empty()) throw validation_error("file: coefficient spec needs a path");
    } else {
        throw validation_error("unknown coefficient spec: " + text);
    }
    return spec;
}

}  // namespace expsieve::seqgen
