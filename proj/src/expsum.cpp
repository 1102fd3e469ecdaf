#include "expsieve/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "expsieve/arith.hpp"
#include "expsieve/seqgen.hpp"

namespace expsieve::expsum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// w[j] = e^{2 pi i j / p}
std::vector<cd> unit_roots(u64 p) {
    std::vector<cd> w(p);
    for (u64 j = 0; j < p; ++j) w[j] = std::polar(1.0, kTwoPi * double(j) / double(p));
    return w;
}

// ---------------------------------------------------------------------------
// radix-2 FFT on power-of-two lengths, twiddles from a shared half table
// ---------------------------------------------------------------------------

struct FftPlan {
    std::size_t m = 1;
    std::vector<cd> roots;  // roots[j] = e^{-2 pi i j / m}, j < m/2
};

FftPlan make_fft_plan(std::size_t m) {
    FftPlan plan;
    plan.m = m;
    plan.roots.resize(m / 2);
    for (std::size_t j = 0; j < m / 2; ++j)
        plan.roots[j] = std::polar(1.0, -kTwoPi * double(j) / double(m));
    return plan;
}

void fft_inplace(std::vector<cd>& a, const FftPlan& plan, bool inverse) {
    const std::size_t m = plan.m;
    for (std::size_t i = 1, j = 0; i < m; ++i) {
        std::size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        const std::size_t stride = m / len;
        for (std::size_t base = 0; base < m; base += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cd w = plan.roots[k * stride];
                if (inverse) w = std::conj(w);
                cd u = a[base + k];
                cd v = a[base + k + len / 2] * w;
                a[base + k] = u + v;
                a[base + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double scale = 1.0 / double(m);
        for (auto& z : a) z *= scale;
    }
}

// ---------------------------------------------------------------------------
// Bluestein: y[k] = sum_n x[n] w^{kn}, w = e^{2 pi i / N}, via
// kn = (k^2 + n^2 - (k-n)^2)/2, so y[k] = A^{k^2} * (u * v)[k] with
// A = e^{pi i / N}, u[n] = x[n] A^{n^2}, v[m] = A^{-m^2}.  The chirp exponent
// n^2 is reduced mod 2N in integers, so the phase argument never grows.
// ---------------------------------------------------------------------------

struct CztPlan {
    u64 n = 0;
    FftPlan fft;
    std::vector<cd> chirp;       // A^{+j^2 mod 2N}, j < N
    std::vector<cd> kernel_fft;  // forward FFT of the wrapped v
};

std::shared_ptr<const CztPlan> czt_plan(u64 n) {
    static std::mutex cache_mutex;
    static std::map<u64, std::shared_ptr<const CztPlan>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto plan = std::make_shared<CztPlan>();
    plan->n = n;
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    plan->fft = make_fft_plan(m);

    plan->chirp.resize(n);
    const u64 two_n = 2 * n;
    for (u64 j = 0; j < n; ++j) {
        u64 e = (j * j) % two_n;  // n <= 2^22 keeps j^2 < 2^44
        plan->chirp[j] = std::polar(1.0, kTwoPi * double(e) / double(two_n));
    }

    std::vector<cd> v(m, cd(0.0, 0.0));
    for (u64 j = 0; j < n; ++j) {
        cd c = std::conj(plan->chirp[j]);
        v[j] = c;
        if (j > 0) v[m - j] = c;  // v[-j] = v[j]
    }
    fft_inplace(v, plan->fft, false);
    plan->kernel_fft = std::move(v);

    cache.emplace(n, plan);
    return plan;
}

std::vector<cd> dft_bluestein(const std::vector<cd>& x) {
    const u64 n = x.size();
    auto plan = czt_plan(n);
    const std::size_t m = plan->fft.m;
    std::vector<cd> u(m, cd(0.0, 0.0));
    for (u64 j = 0; j < n; ++j) u[j] = x[j] * plan->chirp[j];
    fft_inplace(u, plan->fft, false);
    for (std::size_t j = 0; j < m; ++j) u[j] *= plan->kernel_fft[j];
    fft_inplace(u, plan->fft, true);
    std::vector<cd> y(n);
    for (u64 k = 0; k < n; ++k) y[k] = plan->chirp[k] * u[k];
    return y;
}

// Scan |acc[a]| for a in [1, p); strict > keeps the smallest argmax.
// Rounding noise must not break mathematical ties: the reported a is the
// smallest whose value lies within a relative 1e-9 band of the maximum.
constexpr double kTieBand = 1e-9;

void pick_max(const std::vector<cd>& acc, u64 p, double& max_abs, u64& argmax) {
    max_abs = 0.0;
    for (u64 a = 1; a < p; ++a) max_abs = std::max(max_abs, std::abs(acc[a]));
    const double tol = kTieBand * std::max(1.0, max_abs);
    argmax = 1;
    for (u64 a = 1; a < p; ++a) {
        if (std::abs(acc[a]) >= max_abs - tol) {
            argmax = a;
            break;
        }
    }
}

// acc[a] = sigma(a) for all a, built per residue with a running a*r mod p.
std::vector<cd> sigma_all_direct(const ResidueProfile& prof) {
    const u64 p = prof.p;
    auto w = unit_roots(p);
    std::vector<cd> acc(p, cd(0.0, 0.0));
    for (const auto& [r, c] : prof.weights) {
        u64 idx = 0;
        for (u64 a = 0; a < p; ++a) {
            acc[a] += c * w[idx];
            idx += r;
            if (idx >= p) idx -= p;
        }
    }
    return acc;
}

std::vector<cd> sigma_all_fft(const ResidueProfile& prof) {
    std::vector<cd> dense(prof.p, cd(0.0, 0.0));
    for (const auto& [r, c] : prof.weights) dense[r] += c;
    return dft_bluestein(dense);
}

}  // namespace

Strategy parse_strategy(const std::string& text) {
    Strategy s;
    if (text == "auto") {
        s.kind = Strategy::Kind::auto_pick;
    } else if (text == "direct") {
        s.kind = Strategy::Kind::direct;
    } else if (text == "fft") {
        s.kind = Strategy::Kind::fft;
    } else if (text.rfind("sampled:", 0) == 0) {
        s.kind = Strategy::Kind::sampled;
        const std::string arg = text.substr(8);
        u64 k = 0;
        try {
            std::size_t pos = 0;
            k = std::stoull(arg, &pos);
            if (pos != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw validation_error("strategy: bad sample count '" + arg + "'");
        }
        if (k == 0) throw validation_error("strategy: sample count must be positive");
        s.samples = static_cast<u32>(std::min<u64>(k, u64(1) << 31));
    } else {
        throw validation_error("strategy: expected auto|direct|fft|sampled:K, got '" + text + "'");
    }
    return s;
}

ResidueProfile residue_profile(u64 lambda, u64 p, std::span<const u64> s, std::span<const cd> gamma) {
    if (p < 2 || !arith::is_prime(p)) throw validation_error("residue_profile: p must be prime");
    if (lambda % p == 0) throw validation_error("residue_profile: p divides lambda, order undefined");
    return residue_profile_with_order(lambda, p, arith::mult_order(lambda, p), s, gamma);
}

ResidueProfile residue_profile_with_order(u64 lambda, u64 p, u64 t_p, std::span<const u64> s,
                                          std::span<const cd> gamma) {
    if (s.size() != gamma.size())
        throw validation_error("residue_profile: sequence and coefficient lengths differ");
    ResidueProfile prof;
    prof.p = p;
    prof.t_p = t_p;
    prof.term_count = s.size();

    // lambda^{s_n} mod p only depends on s_n mod t_p; fold gamma by exponent
    // class first, then map surviving classes to their residues.
    std::vector<cd> by_exp(t_p, cd(0.0, 0.0));
    std::vector<u32> hits(t_p, 0);
    for (std::size_t n = 0; n < s.size(); ++n) {
        const u64 e = s[n] % t_p;
        by_exp[e] += gamma[n];
        ++hits[e];
        const double mag = std::abs(gamma[n]);
        prof.weight_l1 += mag;
        prof.weight_l2sq += mag * mag;
    }

    const u64 lam = lambda % p;
    u64 power = 1 % p;  // lambda^e mod p as e walks 0..t_p-1
    for (u64 e = 0; e < t_p; ++e) {
        if (hits[e] > 0) prof.weights.emplace_back(power, by_exp[e]);
        power = arith::mulmod(power, lam, p);
    }
    std::sort(prof.weights.begin(), prof.weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return prof;
}

cd sigma_at(const ResidueProfile& profile, u64 a) {
    const u64 p = profile.p;
    const u64 am = a % p;
    cd total(0.0, 0.0);
    for (const auto& [r, c] : profile.weights) {
        const u64 idx = arith::mulmod(am, r, p);
        total += c * std::polar(1.0, kTwoPi * double(idx) / double(p));
    }
    return total;
}

SumScanResult max_abs_sigma(const ResidueProfile& profile, const Strategy& strategy) {
    const u64 p = profile.p;
    if (p < 2) throw validation_error("max_abs_sigma: profile has no modulus");

    SumScanResult res;
    res.p = p;
    res.t_p = profile.t_p;
    res.hbk = hbk_bound(p, profile.t_p);
    res.trivial_bound = profile.weight_l1;

    const u64 nnz = profile.weights.size();
    Strategy::Kind kind = strategy.kind;
    if (kind == Strategy::Kind::auto_pick) {
        if (p * nnz <= strategy.direct_work_budget)
            kind = Strategy::Kind::direct;
        else if (p <= strategy.fft_prime_limit)
            kind = Strategy::Kind::fft;
        else
            kind = Strategy::Kind::sampled;
    }

    if (nnz == 0) {
        res.max_abs = 0.0;
        res.argmax_a = 1;
        res.exact = kind != Strategy::Kind::sampled;
        res.strategy = kind == Strategy::Kind::direct  ? "direct"
                       : kind == Strategy::Kind::fft   ? "fft"
                                                       : "sampled(" + std::to_string(strategy.samples) + ")";
        return res;
    }

    switch (kind) {
        case Strategy::Kind::direct: {
            auto acc = sigma_all_direct(profile);
            pick_max(acc, p, res.max_abs, res.argmax_a);
            res.exact = true;
            res.strategy = "direct";
            break;
        }
        case Strategy::Kind::fft: {
            auto acc = sigma_all_fft(profile);
            pick_max(acc, p, res.max_abs, res.argmax_a);
            res.exact = true;
            res.strategy = "fft";
            break;
        }
        case Strategy::Kind::sampled: {
            // lower bound from samples: a_i = 1 + splitmix64(seed + i) mod (p-1);
            // counter-based draws are replayed for the tie-band argmax pass
            res.max_abs = 0.0;
            for (u32 i = 0; i < strategy.samples; ++i) {
                const u64 a = 1 + seqgen::splitmix64(strategy.seed + i) % (p - 1);
                res.max_abs = std::max(res.max_abs, std::abs(sigma_at(profile, a)));
            }
            const double tol = kTieBand * std::max(1.0, res.max_abs);
            res.argmax_a = p;
            for (u32 i = 0; i < strategy.samples; ++i) {
                const u64 a = 1 + seqgen::splitmix64(strategy.seed + i) % (p - 1);
                if (a < res.argmax_a && std::abs(sigma_at(profile, a)) >= res.max_abs - tol)
                    res.argmax_a = a;
            }
            if (res.argmax_a == p) res.argmax_a = 1;
            res.exact = false;
            res.strategy = "sampled(" + std::to_string(strategy.samples) + ")";
            break;
        }
        case Strategy::Kind::auto_pick:
            break;  // resolved above
    }
    return res;
}

std::vector<cd> dft_positive(const std::vector<cd>& x) {
    if (x.empty()) return {};
    if (x.size() == 1) return x;
    return dft_bluestein(x);
}

GaussSumMax gauss_sum_max(u64 theta, u64 p) {
    if (p < 2 || !arith::is_prime(p)) throw validation_error("gauss_sum_max: p must be prime");
    if (theta % p == 0) throw validation_error("gauss_sum_max: p divides theta");
    GaussSumMax out;
    out.t = arith::mult_order(theta, p);

    // subgroup elements theta^z, z = 1..t, each with weight 1
    auto w = unit_roots(p);
    std::vector<cd> acc(p, cd(0.0, 0.0));
    const u64 th = theta % p;
    u64 elem = 1;
    for (u64 z = 1; z <= out.t; ++z) {
        elem = arith::mulmod(elem, th, p);
        u64 idx = 0;
        for (u64 a = 0; a < p; ++a) {
            acc[a] += w[idx];
            idx += elem;
            if (idx >= p) idx -= p;
        }
    }
    u64 argmax = 1;
    pick_max(acc, p, out.max_abs, argmax);
    return out;
}

double hbk_bound(u64 p, u64 t) {
    if (p < 2) throw validation_error("hbk_bound: p must be at least 2");
    if (t == 0) throw validation_error("hbk_bound: t must be positive");
    const double dp = double(p);
    const double dt = double(t);
    const double b1 = std::sqrt(dp);
    const double b2 = std::pow(dp, 0.25) * std::pow(dt, 0.375);
    const double b3 = std::pow(dp, 0.125) * std::pow(dt, 0.625);
    return std::min(b1, std::min(b2, b3));
}

double pair_bound(u64 p, u64 t, const pairs::ExponentPair& pair) {
    if (p < 2) throw validation_error("pair_bound: p must be at least 2");
    if (t == 0) throw validation_error("pair_bound: t must be positive");
    return std::pow(double(p), pair.alpha.to_double()) * std::pow(double(t), pair.beta.to_double());
}

double large_sieve_lhs(std::span<const u64> s, std::span<const cd> gamma, u64 K) {
    if (s.size() != gamma.size())
        throw validation_error("large_sieve_lhs: sequence and coefficient lengths differ");
    if (K == 0) throw validation_error("large_sieve_lhs: K must be positive");
    double total = 0.0;
    std::vector<cd> weight;
    for (u64 k = 1; k <= K; ++k) {
        weight.assign(k, cd(0.0, 0.0));
        for (std::size_t n = 0; n < s.size(); ++n) weight[s[n] % k] += gamma[n];
        for (u64 c = 1; c <= k; ++c) {
            if (std::gcd(c, k) != 1) continue;
            cd sum(0.0, 0.0);
            for (u64 j = 0; j < k; ++j) {
                if (weight[j] == cd(0.0, 0.0)) continue;
                const u64 idx = arith::mulmod(c, j, k);
                sum += weight[j] * std::polar(1.0, kTwoPi * double(idx) / double(k));
            }
            total += std::norm(sum);
        }
    }
    return total;
}

double large_sieve_rhs(double K, double s_T, double T) {
    if (K <= 0.0 || T <= 0.0) throw validation_error("large_sieve_rhs: K and T must be positive");
    return (K * K + s_T) * T;
}

}  // namespace expsieve::expsum
