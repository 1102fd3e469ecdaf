#pragma once

// Exponential-sum engine for sigma_p(a) = sum_n gamma_n e_p(a lambda^{s_n}):
// residue aggregation (lambda^{s_n} depends only on s_n mod t_p), exact or
// sampled maximization of |sigma_p(a)| over a, subgroup Gauss-sum maxima,
// and the two lemma-level bounds.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "expsieve/base.hpp"
#include "expsieve/pairs.hpp"

namespace expsieve::expsum {

using cd = std::complex<double>;

// Aggregated complex weight per residue class of lambda^{s_n} mod p.
// weights is sorted by residue; only residues hit by some n appear, so there
// are at most min(t_p, T) entries, all inside the subgroup generated by
// lambda.
struct ResidueProfile {
    u64 p = 0;
    u64 t_p = 0;
    std::vector<std::pair<u64, cd>> weights;
    u64 term_count = 0;
    double weight_l1 = 0.0;    // sum |gamma_n|
    double weight_l2sq = 0.0;  // sum |gamma_n|^2
};

struct Strategy {
    enum class Kind { auto_pick, direct, fft, sampled };
    Kind kind = Kind::auto_pick;
    u32 samples = 1024;  // sampled only
    u64 seed = 0;        // sampled only
    // auto_pick cutoffs
    u64 direct_work_budget = u64(1) << 26;  // max p*nnz for the direct scan
    u64 fft_prime_limit = u64(1) << 22;     // max p for the length-p transform
};

Strategy parse_strategy(const std::string& text);  // auto|direct|fft|sampled:K

struct SumScanResult {
    u64 p = 0;
    u64 t_p = 0;
    double max_abs = 0.0;
    u64 argmax_a = 1;          // smallest maximizing a in [1, p)
    bool exact = true;         // false iff the sampled strategy ran
    std::string strategy;      // direct | fft | sampled(k)
    double hbk = 0.0;          // Lemma-2 style bound at (p, t_p)
    double trivial_bound = 0.0;  // = weight_l1
};

ResidueProfile residue_profile(u64 lambda, u64 p, std::span<const u64> s, std::span<const cd> gamma);

// Same, with the multiplicative order already known (census reuse).
ResidueProfile residue_profile_with_order(u64 lambda, u64 p, u64 t_p, std::span<const u64> s,
                                          std::span<const cd> gamma);

// sum_r c_r e^{2 pi i a r / p}; a*r is reduced mod p in integers before the
// trigonometric call.
cd sigma_at(const ResidueProfile& profile, u64 a);

// max over a in [1, p) of |sigma(a)|, by the requested strategy.
SumScanResult max_abs_sigma(const ResidueProfile& profile, const Strategy& strategy);

// y[k] = sum_n x[n] e^{2 pi i k n / N} for arbitrary N (chirp-z/Bluestein).
std::vector<cd> dft_positive(const std::vector<cd>& x);

struct GaussSumMax {
    u64 t = 0;          // multiplicative order of theta mod p
    double max_abs = 0.0;
};

// Exact max over a in [1, p) of |sum_{z=1}^{t} e_p(a theta^z)|, direct scan.
GaussSumMax gauss_sum_max(u64 theta, u64 p);

// min{ p^(1/2), p^(1/4) t^(3/8), p^(1/8) t^(5/8) }
double hbk_bound(u64 p, u64 t);

// p^alpha * t^beta
double pair_bound(u64 p, u64 t, const pairs::ExponentPair& pair);

// sum_{k<=K} sum_{c<=k, (c,k)=1} |sum_n gamma_n e_k(c s_n)|^2, evaluated
// exactly.
double large_sieve_lhs(std::span<const u64> s, std::span<const cd> gamma, u64 K);

// (K^2 + s_T) * T
double large_sieve_rhs(double K, double s_T, double T);

}  // namespace expsieve::expsum
