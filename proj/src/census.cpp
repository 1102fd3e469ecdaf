#include "expsieve/census.hpp"

#include <algorithm>
#include <cmath>

#include "expsieve/arith.hpp"
#include "expsieve/parallel.hpp"

namespace expsieve::census {

OrderCensus order_census(u64 lambda, double X, unsigned workers) {
    if (lambda < 2) throw validation_error("order_census: lambda must be at least 2");
    if (!(X >= 3.0)) throw validation_error("order_census: X must be at least 3");

    const auto primes = arith::sieve_primes(u64(std::floor(X)));
    OrderCensus out;
    std::vector<u64> kept;
    kept.reserve(primes.size());
    for (u64 p : primes) {
        if (lambda % p == 0)
            out.excluded.push_back(p);
        else
            kept.push_back(p);
    }

    out.records.resize(kept.size());
    parallel::parallel_for_index(kept.size(), workers, [&](std::size_t i) {
        const u64 p = kept[i];
        PrimeRecord rec;
        rec.p = p;
        const auto pm1 = arith::factorize(p - 1);
        rec.t_p = arith::mult_order_factored(lambda, p, pm1);
        rec.tau_pm1 = arith::tau(pm1);
        out.records[i] = rec;
    });
    return out;
}

CensusSplit split_E(std::vector<PrimeRecord>& records, double Delta, double X, double epsilon) {
    if (!(X >= 3.0)) throw validation_error("split_E: X must be at least 3");
    if (epsilon <= 0.0) throw validation_error("split_E: epsilon must be positive");
    const double tau_cut = std::pow(std::log(X), 1.0 + epsilon / 2.0);
    CensusSplit split;
    for (auto& rec : records) {
        rec.in_E = double(rec.t_p) > Delta;
        rec.in_Eprime = rec.in_E && double(rec.tau_pm1) < tau_cut;
        if (rec.in_E)
            split.E.push_back(rec);
        else
            split.Ebar.push_back(rec);
        if (rec.in_Eprime) split.Eprime.push_back(rec);
    }
    return split;
}

std::vector<expsum::SumScanResult> scan_records(const std::vector<PrimeRecord>& records, u64 lambda,
                                                std::span<const u64> s,
                                                std::span<const expsum::cd> gamma,
                                                const expsum::Strategy& strategy,
                                                unsigned workers) {
    std::vector<expsum::SumScanResult> results(records.size());
    parallel::parallel_for_index(records.size(), workers, [&](std::size_t i) {
        const auto& rec = records[i];
        const auto prof = expsum::residue_profile_with_order(lambda, rec.p, rec.t_p, s, gamma);
        results[i] = expsum::max_abs_sigma(prof, strategy);
    });
    return results;
}

LhsResult theorem1_lhs(const std::vector<PrimeRecord>& E, u64 lambda, std::span<const u64> s,
                       std::span<const expsum::cd> gamma, const expsum::Strategy& strategy,
                       unsigned workers) {
    const auto scans = scan_records(E, lambda, s, gamma, strategy, workers);
    LhsResult out;
    for (std::size_t i = 0; i < scans.size(); ++i) {
        out.value += scans[i].max_abs * scans[i].max_abs / double(E[i].tau_pm1);
        out.exact = out.exact && scans[i].exact;
    }
    return out;
}

LhsResult theorem2_lhs(const std::vector<PrimeRecord>& E1, std::span<const u64> Tp, u64 lambda,
                       std::span<const u64> s, std::span<const expsum::cd> gamma,
                       const expsum::Strategy& strategy, unsigned workers) {
    if (Tp.size() != E1.size())
        throw validation_error("theorem2_lhs: need one truncation per prime");
    const u64 T = s.size();
    for (u64 tp : Tp)
        if (tp < 1 || tp > T)
            throw validation_error("theorem2_lhs: each T_p must lie in [1, T]");

    std::vector<double> terms(E1.size(), 0.0);
    std::vector<std::uint8_t> exact_flags(E1.size(), 1);
    parallel::parallel_for_index(E1.size(), workers, [&](std::size_t i) {
        const auto& rec = E1[i];
        const auto prof = expsum::residue_profile_with_order(
            lambda, rec.p, rec.t_p, s.subspan(0, Tp[i]), gamma.subspan(0, Tp[i]));
        const auto scan = expsum::max_abs_sigma(prof, strategy);
        terms[i] = scan.max_abs * scan.max_abs / double(rec.tau_pm1);
        exact_flags[i] = scan.exact ? 1 : 0;
    });
    LhsResult out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out.value += terms[i];
        out.exact = out.exact && exact_flags[i];
    }
    return out;
}

LhsResult theorem3_lhs(const std::vector<PrimeRecord>& E, u64 lambda, u64 N,
                       std::span<const expsum::cd> delta, const expsum::Strategy& strategy,
                       unsigned workers) {
    if (delta.size() != N) throw validation_error("theorem3_lhs: need exactly N coefficients");
    std::vector<u64> s(N);
    for (u64 n = 0; n < N; ++n) s[n] = n + 1;
    return theorem1_lhs(E, lambda, s, delta, strategy, workers);
}

RhsResult theorem1_rhs(double X, double T, double Delta, double L, double s_T) {
    if (X <= 0.0 || T <= 0.0 || Delta <= 0.0 || L <= 0.0 || s_T <= 0.0)
        throw validation_error("theorem1_rhs: all parameters must be positive");
    RhsResult out;
    const double term1 = X;
    const double term2 = s_T * std::pow(X, 1.0 / 7.0) * std::pow(Delta, -3.0 / 7.0) * L;
    const double term3 = T * std::pow(L, -7.0 / 4.0);
    out.value = (term1 + term2 + term3) * X * T;
    out.parts = {{"term1", term1}, {"term2", term2}, {"term3", term3}};
    return out;
}

double theorem1_rhs_optimized(double X, double T, double Delta, double s_T) {
    if (X <= 0.0 || T <= 0.0 || Delta <= 0.0 || s_T < 0.0)
        throw validation_error("theorem1_rhs_optimized: parameters must be positive");
    const double inner = std::pow(s_T, 7.0) * std::pow(T, 4.0) * std::pow(X, -10.0) *
                         std::pow(Delta, -3.0);
    return (1.0 + std::pow(inner, 1.0 / 11.0)) * X * X * T;
}

RhsResult theorem2_rhs(double X, double T, double Delta, double L, double s_T, double K,
                       const std::vector<PrimeRecord>& E1) {
    if (K <= 1.0) throw validation_error("theorem2_rhs: K must exceed 1");
    const RhsResult base = theorem1_rhs(X, T, Delta, L, s_T);
    double tau_sum = 0.0;
    for (const auto& rec : E1) tau_sum += 1.0 / double(rec.tau_pm1);
    const double lk = std::log(K);
    RhsResult out;
    const double term1 = base.value * lk * lk;
    const double term2 = (T * T) / (K * K) * tau_sum;
    out.value = term1 + term2;
    out.parts = {{"term1", term1}, {"term2", term2}};
    return out;
}

RhsResult theorem3_rhs(double X, double N, double Delta, double L, const pairs::ExponentPair& pair,
                       std::span<const expsum::cd> delta) {
    if (X <= 0.0 || N <= 0.0 || Delta <= 0.0 || L <= 0.0)
        throw validation_error("theorem3_rhs: parameters must be positive");
    const Rational three_minus_2b = Rational(3) - Rational(2) * pair.beta;
    if (!(Rational(0) < three_minus_2b))
        throw validation_error("theorem3_rhs: pair beta must keep 3 - 2*beta positive");
    const double e1 = ((Rational(2) * pair.alpha) / three_minus_2b).to_double();
    const double e2 = ((Rational(2) - Rational(2) * pair.beta) / three_minus_2b).to_double();

    double l1 = 0.0, l2sq = 0.0;
    for (const auto& d : delta) {
        const double mag = std::abs(d);
        l1 += mag;
        l2sq += mag * mag;
    }
    RhsResult out;
    const double term1 =
        X * (X + N * std::pow(X, e1) * std::pow(Delta, -e2) * L) * l2sq;
    const double term2 =
        X * std::pow(L, 2.0 * pair.beta.to_double() - 3.0) * l1 * l1;
    out.value = term1 + term2;
    out.parts = {{"term1", term1}, {"term2", term2}};
    return out;
}

VerificationReport make_report(const LhsResult& lhs, const RhsResult& rhs) {
    VerificationReport rep;
    rep.lhs = lhs.value;
    rep.rhs = rhs.value;
    rep.ratio = rhs.value > 0.0 ? lhs.value / rhs.value : 0.0;
    rep.parts = rhs.parts;
    rep.exact = lhs.exact;
    return rep;
}

CorollaryResult corollary_census(const std::vector<PrimeRecord>& Eprime, u64 lambda,
                                 std::span<const u64> s, u64 T, double epsilon,
                                 const expsum::Strategy& strategy, double c_corr,
                                 unsigned workers) {
    if (T < 3) throw validation_error("corollary_census: T must be at least 3");
    if (s.size() < T) throw validation_error("corollary_census: sequence shorter than T");
    if (epsilon <= 0.0) throw validation_error("corollary_census: epsilon must be positive");
    if (c_corr <= 0.0) throw validation_error("corollary_census: C_corr must be positive");

    CorollaryResult out;
    out.threshold = c_corr * double(T) * std::pow(std::log(double(T)), -epsilon / 5.0);
    if (Eprime.empty()) {
        out.eprime_empty = true;
        return out;
    }

    const std::vector<expsum::cd> ones(T, expsum::cd(1.0, 0.0));
    const auto scans = scan_records(Eprime, lambda, s.subspan(0, T), ones, strategy, workers);
    for (std::size_t i = 0; i < scans.size(); ++i) {
        out.exact = out.exact && scans[i].exact;
        if (scans[i].max_abs > out.threshold) out.violating.push_back(Eprime[i].p);
    }
    out.fraction = double(out.violating.size()) / double(Eprime.size());
    return out;
}

SuggestedParams parameter_suggest(double X, double epsilon, double nu_T) {
    if (!(X >= 3.0)) throw validation_error("parameter_suggest: X must be at least 3");
    if (epsilon <= 0.0) throw validation_error("parameter_suggest: epsilon must be positive");
    SuggestedParams out;
    const long double t_real =
        static_cast<long double>(X) * powl(logl(static_cast<long double>(X)),
                                           static_cast<long double>(2.0 + epsilon));
    out.T = static_cast<u64>(floorl(t_real));
    const double lt = std::log(double(out.T));
    out.L = std::pow(double(out.T), std::abs(nu_T)) * std::pow(lt, 10.0);
    out.Delta = std::sqrt(double(out.T)) * std::pow(out.L, 7.0);
    return out;
}

ErdosMurtyResult erdos_murty_check(const std::vector<PrimeRecord>& Ebar, double Delta, u64 lambda) {
    if (!(Delta > 1.0)) throw validation_error("erdos_murty_check: Delta must exceed 1");
    ErdosMurtyResult out;
    out.count = Ebar.size();
    out.bound = Delta * Delta / std::log(Delta);
    out.ratio = out.count == 0 ? 0.0 : double(out.count) / out.bound;
    for (const auto& rec : Ebar) {
        const bool order_small = double(rec.t_p) <= Delta;
        const bool divides = arith::powmod(i64(lambda % rec.p), rec.t_p, rec.p) == 1;
        if (!order_small || !divides) {
            out.divisibility_ok = false;
            break;
        }
    }
    return out;
}

double titchmarsh_ratio(double X) {
    if (!(X >= 3.0)) throw validation_error("titchmarsh_ratio: X must be at least 3");
    const auto primes = arith::sieve_primes(u64(std::floor(X)));
    double total = 0.0;
    for (u64 p : primes) total += double(arith::tau(arith::factorize(p - 1)));
    return total / X;
}

}  // namespace expsieve::census
