#pragma once

// Exponent pairs (alpha, beta) for subgroup Gauss sums: the two Konyagin
// families, convex combinations, the sparsity objective
// f(x,y) = 1 + (1-2x-y)/(3-2y), and its maximization over a candidate grid.
// All arithmetic is exact rational: f(1/8, 5/8) = 15/14 is an identity here,
// not an approximation.

#include <string>
#include <vector>

#include "expsieve/rational.hpp"

namespace expsieve::pairs {

struct ExponentPair {
    Rational alpha;
    Rational beta;
    std::string provenance;  // konyagin(n) | konyagin_prime(n) | hbk | convex(..|..|w) | conjecture(e) | user
};

// alpha_n = 1/(2n^2), beta_n = 1 - 2/n^2 + 1/(2^(n-1) n^2)
ExponentPair konyagin_pair(u32 n);

// alpha'_n = 1/(2n(n+1)), beta'_n = 1 - 2/(n(n+1)) + 3/(2^(n+1) n(n+1))
ExponentPair konyagin_pair_prime(u32 n);

// The bound's own pair (1/8, 5/8); identical to konyagin_pair(2).
ExponentPair hbk_pair();

// f(alpha, beta) = 1 + (1-2*alpha-beta)/(3-2*beta)
Rational f_exponent(const ExponentPair& p);

// Same value as f_exponent; named for its role as the growth exponent of s_n.
Rational sparsity_exponent(const ExponentPair& p);

// x*p1 + (1-x)*p2 componentwise, 0 <= x <= 1.
ExponentPair convex_combine(const ExponentPair& p1, const ExponentPair& p2, const Rational& x);

// (eps, 1/2 + eps); requires 0 <= eps <= 1/2.
ExponentPair conjecture_pair(const Rational& eps);

struct OptimizeResult {
    ExponentPair best;
    Rational best_value;
    std::vector<std::pair<ExponentPair, Rational>> table;  // enumeration order
};

// Evaluates f on konyagin_pair(n), konyagin_pair_prime(n) for n <= n_max and
// on all pairwise convex combinations at weights k/grid, k = 0..grid.
// Ties break toward smaller alpha, then smaller beta.
OptimizeResult optimize_f(u32 n_max, u32 grid);

}  // namespace expsieve::pairs
