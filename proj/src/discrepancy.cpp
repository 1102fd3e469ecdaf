#include "expsieve/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "expsieve/arith.hpp"

namespace expsieve::discrepancy {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_nonempty(const PointSet& ps, const char* op) {
    if (ps.points.empty()) throw validation_error(std::string(op) + ": point set is empty");
}

}  // namespace

PointSet fractional_parts(u64 lambda, u64 p, std::span<const u64> s) {
    if (p < 2 || !arith::is_prime(p)) throw validation_error("fractional_parts: p must be prime");
    if (lambda % p == 0) throw validation_error("fractional_parts: p divides lambda");
    PointSet ps;
    ps.points.reserve(s.size());
    const u64 t = arith::mult_order(lambda, p);
    const u64 lam = lambda % p;
    for (u64 sn : s) {
        const u64 r = arith::powmod(i64(lam), sn % t, p);
        ps.points.push_back(double(r) / double(p));
    }
    return ps;
}

double star_discrepancy(const PointSet& ps) {
    require_nonempty(ps, "star_discrepancy");
    std::vector<double> x = ps.points;
    std::sort(x.begin(), x.end());
    const double n = double(x.size());
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        best = std::max(best, double(i + 1) / n - x[i]);
        best = std::max(best, x[i] - double(i) / n);
    }
    return best;
}

double extreme_discrepancy(const PointSet& ps) {
    require_nonempty(ps, "extreme_discrepancy");
    std::vector<double> x = ps.points;
    std::sort(x.begin(), x.end());
    const double n = double(x.size());

    std::vector<double> values{0.0, 1.0};
    values.insert(values.end(), x.begin(), x.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // below[i] = #{x_j < values[i]}, at_or_below[i] = #{x_j <= values[i]}
    const std::size_t m = values.size();
    std::vector<std::size_t> below(m), at_or_below(m);
    for (std::size_t i = 0; i < m; ++i) {
        below[i] = std::lower_bound(x.begin(), x.end(), values[i]) - x.begin();
        at_or_below[i] = std::upper_bound(x.begin(), x.end(), values[i]) - x.begin();
    }

    // Interval [a,b): the left boundary either keeps or sheds a point equal
    // to a (limit a -> value+0), likewise the right boundary at b.  Counts
    // before the boundary therefore take both the strict and non-strict
    // value at every candidate.
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double va = values[i];
        const std::size_t left_opts[2] = {below[i], at_or_below[i]};
        for (std::size_t j = i; j < m; ++j) {
            const double len = values[j] - va;
            const std::size_t right_opts[2] = {below[j], at_or_below[j]};
            for (std::size_t la : left_opts) {
                for (std::size_t rb : right_opts) {
                    const double count = rb > la ? double(rb - la) : 0.0;
                    best = std::max(best, std::abs(count / n - len));
                }
            }
        }
    }
    return best;
}

double erdos_turan_bound(const PointSet& ps, u64 H) {
    require_nonempty(ps, "erdos_turan_bound");
    if (H == 0) throw validation_error("erdos_turan_bound: H must be positive");
    const double n = double(ps.points.size());
    double total = 1.0 / double(H + 1);
    for (u64 h = 1; h <= H; ++h) {
        std::complex<double> s_h(0.0, 0.0);
        for (double xj : ps.points) s_h += std::polar(1.0, kTwoPi * double(h) * xj);
        total += 3.0 * (1.0 / double(h)) * std::abs(s_h) / n;
    }
    return total;
}

u64 default_harmonics(std::size_t N) {
    u64 h = u64(std::floor(std::sqrt(double(N))));
    return h == 0 ? 1 : h;
}

}  // namespace expsieve::discrepancy
