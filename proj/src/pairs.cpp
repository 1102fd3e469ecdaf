#include "expsieve/pairs.hpp"

namespace expsieve::pairs {

namespace {

i64 pow2_checked(u32 k) {
    if (k >= 62) throw std::overflow_error("konyagin pair index too large");
    return static_cast<i64>(1) << k;
}

void check_unit_square(const ExponentPair& p, const char* who) {
    Rational zero(0), one(1);
    if (p.alpha < zero || p.alpha > one || p.beta < zero || p.beta > one)
        throw validation_error(std::string(who) + ": pair outside [0,1]^2");
}

}  // namespace

ExponentPair konyagin_pair(u32 n) {
    if (n < 1) throw validation_error("konyagin_pair: n must be >= 1");
    i64 n2 = static_cast<i64>(n) * n;
    Rational alpha(1, 2 * n2);
    Rational beta = Rational(1) - Rational(2, n2) + Rational(1, pow2_checked(n - 1)) / Rational(n2);
    ExponentPair p{alpha, beta, "konyagin(" + std::to_string(n) + ")"};
    check_unit_square(p, "konyagin_pair");
    return p;
}

ExponentPair konyagin_pair_prime(u32 n) {
    if (n < 1) throw validation_error("konyagin_pair_prime: n must be >= 1");
    i64 nn1 = static_cast<i64>(n) * (n + 1);
    Rational alpha(1, 2 * nn1);
    Rational beta =
        Rational(1) - Rational(2, nn1) + Rational(3, pow2_checked(n + 1)) / Rational(nn1);
    ExponentPair p{alpha, beta, "konyagin_prime(" + std::to_string(n) + ")"};
    check_unit_square(p, "konyagin_pair_prime");
    return p;
}

ExponentPair hbk_pair() { return {Rational(1, 8), Rational(5, 8), "hbk"}; }

Rational f_exponent(const ExponentPair& p) {
    Rational num = Rational(1) - Rational(2) * p.alpha - p.beta;
    Rational den = Rational(3) - Rational(2) * p.beta;
    return Rational(1) + num / den;
}

Rational sparsity_exponent(const ExponentPair& p) { return f_exponent(p); }

ExponentPair convex_combine(const ExponentPair& p1, const ExponentPair& p2, const Rational& x) {
    if (x < Rational(0) || x > Rational(1))
        throw validation_error("convex_combine: weight must lie in [0,1]");
    Rational y = Rational(1) - x;
    ExponentPair p;
    p.alpha = x * p1.alpha + y * p2.alpha;
    p.beta = x * p1.beta + y * p2.beta;
    p.provenance = "convex(" + p1.provenance + "|" + p2.provenance + "|" + x.str() + ")";
    return p;
}

ExponentPair conjecture_pair(const Rational& eps) {
    if (eps < Rational(0)) throw validation_error("conjecture_pair: eps must be >= 0");
    if (eps > Rational(1, 2))
        throw validation_error("conjecture_pair: eps > 1/2 leaves [0,1]^2");
    Rational half(1, 2);
    return {eps, half + eps, "conjecture(" + eps.str() + ")"};
}

OptimizeResult optimize_f(u32 n_max, u32 grid) {
    if (n_max < 1 || grid < 1) throw validation_error("optimize_f: n_max and grid must be >= 1");

    std::vector<ExponentPair> base;
    for (u32 n = 1; n <= n_max; ++n) base.push_back(konyagin_pair(n));
    for (u32 n = 1; n <= n_max; ++n) base.push_back(konyagin_pair_prime(n));

    OptimizeResult result;
    bool have_best = false;
    auto consider = [&](const ExponentPair& p) {
        Rational value = f_exponent(p);
        result.table.emplace_back(p, value);
        bool better = false;
        if (!have_best || value > result.best_value) {
            better = true;
        } else if (value == result.best_value) {
            if (p.alpha < result.best.alpha ||
                (p.alpha == result.best.alpha && p.beta < result.best.beta))
                better = true;
        }
        if (better) {
            result.best = p;
            result.best_value = value;
            have_best = true;
        }
    };

    for (const auto& p : base) consider(p);
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            for (u32 k = 0; k <= grid; ++k) {
                consider(convex_combine(base[i], base[j],
                                        Rational(static_cast<i64>(k), static_cast<i64>(grid))));
            }
        }
    }
    return result;
}

}  // namespace expsieve::pairs
