#pragma once

// Prime censuses E(Delta, X), E', Ebar over p <= X with p not dividing
// lambda; LHS/RHS evaluation for Theorems 1-3 and Corollary 1; the
// Erdos-Murty and Titchmarsh checks; parameter suggestion.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expsieve/base.hpp"
#include "expsieve/expsum.hpp"
#include "expsieve/pairs.hpp"

namespace expsieve::census {

struct CensusParams {
    u64 lambda = 2;
    double X = 1000.0;
    u64 T = 100;
    double Delta = 0.0;
    double L = 1.0;
    double K = 10.0;
    double epsilon = 1.0;
    u64 seed = 0;
    expsum::Strategy strategy;
};

struct PrimeRecord {
    u64 p = 0;
    u64 t_p = 0;       // multiplicative order of lambda mod p, divides p-1
    u64 tau_pm1 = 0;   // tau(p-1)
    bool in_E = false;       // t_p > Delta
    bool in_Eprime = false;  // in_E and tau(p-1) < (ln X)^{1+eps/2}
};

struct OrderCensus {
    std::vector<PrimeRecord> records;  // ascending p, primes not dividing lambda
    std::vector<u64> excluded;         // primes <= X dividing lambda
};

// One record per prime p <= X with p coprime to lambda; Delta and epsilon
// are applied afterwards by split_E.
OrderCensus order_census(u64 lambda, double X, unsigned workers = 1);

struct CensusSplit {
    std::vector<PrimeRecord> E;
    std::vector<PrimeRecord> Eprime;  // subset of E
    std::vector<PrimeRecord> Ebar;
};

// Sets in_E / in_Eprime on the records and partitions them.
CensusSplit split_E(std::vector<PrimeRecord>& records, double Delta, double X, double epsilon);

// Per-prime max scan over a census slice, ascending p; worker-count
// independent.
std::vector<expsum::SumScanResult> scan_records(const std::vector<PrimeRecord>& records, u64 lambda,
                                                std::span<const u64> s,
                                                std::span<const expsum::cd> gamma,
                                                const expsum::Strategy& strategy,
                                                unsigned workers = 1);

struct LhsResult {
    double value = 0.0;
    bool exact = true;  // false once any prime used the sampled strategy
};

// sum_{p in E} max_a |sigma_p(a)|^2 / tau(p-1)
LhsResult theorem1_lhs(const std::vector<PrimeRecord>& E, u64 lambda, std::span<const u64> s,
                       std::span<const expsum::cd> gamma, const expsum::Strategy& strategy,
                       unsigned workers = 1);

// Same with a per-prime truncation T_p <= T of the sequence.
LhsResult theorem2_lhs(const std::vector<PrimeRecord>& E1, std::span<const u64> Tp, u64 lambda,
                       std::span<const u64> s, std::span<const expsum::cd> gamma,
                       const expsum::Strategy& strategy, unsigned workers = 1);

// Specialization s_n = n, n = 1..N, with arbitrary coefficients delta.
LhsResult theorem3_lhs(const std::vector<PrimeRecord>& E, u64 lambda, u64 N,
                       std::span<const expsum::cd> delta, const expsum::Strategy& strategy,
                       unsigned workers = 1);

struct RhsResult {
    double value = 0.0;
    std::vector<std::pair<std::string, double>> parts;
};

// (X + s_T X^{1/7} Delta^{-3/7} L + T L^{-7/4}) X T, parts = the three inner
// addends.
RhsResult theorem1_rhs(double X, double T, double Delta, double L, double s_T);

// (1 + (s_T^7 T^4 X^{-10} Delta^{-3})^{1/11}) X^2 T
double theorem1_rhs_optimized(double X, double T, double Delta, double s_T);

// theorem1_rhs * (ln K)^2 + (T^2/K^2) sum_{p in E1} 1/tau(p-1), K > 1.
RhsResult theorem2_rhs(double X, double T, double Delta, double L, double s_T, double K,
                       const std::vector<PrimeRecord>& E1);

// X (X + N X^{2a/(3-2b)} Delta^{-(2-2b)/(3-2b)} L) sum|d_n|^2
//   + X L^{2b-3} (sum|d_n|)^2
RhsResult theorem3_rhs(double X, double N, double Delta, double L, const pairs::ExponentPair& pair,
                       std::span<const expsum::cd> delta);

struct VerificationReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs/rhs when rhs > 0, else 0
    std::vector<std::pair<std::string, double>> parts;
    bool exact = true;
};

VerificationReport make_report(const LhsResult& lhs, const RhsResult& rhs);

struct CorollaryResult {
    double threshold = 0.0;       // c_corr * T * (ln T)^{-eps/5}
    std::vector<u64> violating;   // p in E' with max |sigma_p| > threshold
    double fraction = 0.0;        // |violating| / |E'|, 0 when E' is empty
    bool eprime_empty = false;
    bool exact = true;
};

// Coefficients are fixed to 1; uses the first T entries of s.
CorollaryResult corollary_census(const std::vector<PrimeRecord>& Eprime, u64 lambda,
                                 std::span<const u64> s, u64 T, double epsilon,
                                 const expsum::Strategy& strategy, double c_corr = 1.0,
                                 unsigned workers = 1);

struct SuggestedParams {
    u64 T = 0;        // floor(X (ln X)^{2+eps})
    double L = 0.0;   // T^{|nu_T|} (ln T)^{10}
    double Delta = 0.0;  // T^{1/2} L^7
};

SuggestedParams parameter_suggest(double X, double epsilon, double nu_T);

struct ErdosMurtyResult {
    u64 count = 0;           // |Ebar|
    double bound = 0.0;      // Delta^2 / ln Delta
    double ratio = 0.0;      // count / bound, 0 when count = 0
    bool divisibility_ok = true;  // every p in Ebar has t_p <= Delta and p | lambda^{t_p} - 1
};

ErdosMurtyResult erdos_murty_check(const std::vector<PrimeRecord>& Ebar, double Delta, u64 lambda);

// sum_{p <= X} tau(p-1) / X
double titchmarsh_ratio(double X);

}  // namespace expsieve::census
