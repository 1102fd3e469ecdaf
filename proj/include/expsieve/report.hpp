#pragma once

// Report serialization: pinned CSV column schemas and JSON mirrors, both
// with 12-significant-digit floats so identical runs emit identical bytes.

#include <string>
#include <vector>

#include "expsieve/census.hpp"
#include "expsieve/discrepancy.hpp"
#include "expsieve/expsum.hpp"
#include "expsieve/pairs.hpp"

namespace expsieve::report {

enum class Format { csv, json };
Format parse_format(const std::string& text);  // csv|json

std::string format_double(double v);  // scientific, 12 significant digits
double parse_double(const std::string& text);

// census: p,t_p,tau_pm1,in_E,in_Eprime
std::string census_csv(const std::vector<census::PrimeRecord>& records);
std::string census_json(const std::vector<census::PrimeRecord>& records);
std::vector<census::PrimeRecord> parse_census_csv(const std::string& text);

// scan: p,t_p,max_abs,argmax_a,exact,hbk,trivial_bound
std::string scan_csv(const std::vector<expsum::SumScanResult>& results);
std::string scan_json(const std::vector<expsum::SumScanResult>& results);
std::vector<expsum::SumScanResult> parse_scan_csv(const std::string& text);

// verify: lhs,rhs,ratio,term1,term2,term3,exact  (absent terms emit 0)
std::string verify_csv(const census::VerificationReport& rep);
std::string verify_json(const census::VerificationReport& rep);
census::VerificationReport parse_verify_csv(const std::string& text);

// pairs: alpha,beta,f,provenance
std::string pairs_csv(const pairs::OptimizeResult& result);
std::string pairs_json(const pairs::OptimizeResult& result);

// lsieve: lhs,rhs,ratio,K,T
std::string lsieve_csv(double lhs, double rhs, double K, double T);
std::string lsieve_json(double lhs, double rhs, double K, double T);

// discrepancy: N,star,extreme,erdos_turan,H
std::string discrepancy_csv(std::size_t N, double star, double extreme, double et, u64 H);
std::string discrepancy_json(std::size_t N, double star, double extreme, double et, u64 H);

// suggest: T,L,Delta
std::string suggest_csv(const census::SuggestedParams& sp);
std::string suggest_json(const census::SuggestedParams& sp);

// corollary: threshold,violating,fraction,eprime_empty,exact
// (violating = semicolon-joined primes)
std::string corollary_csv(const census::CorollaryResult& res);
std::string corollary_json(const census::CorollaryResult& res);

// erdos-murty: count,bound,ratio,divisibility_ok
std::string erdos_murty_csv(const census::ErdosMurtyResult& res);
std::string erdos_murty_json(const census::ErdosMurtyResult& res);

// titchmarsh: X,ratio
std::string titchmarsh_csv(double X, double ratio);
std::string titchmarsh_json(double X, double ratio);

void write_file(const std::string& path, const std::string& content);  // io_error on failure
std::string read_file(const std::string& path);

}  // namespace expsieve::report
