#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "blob/errors.hpp"

// Combinatorial primitives behind every closed-form figure of merit:
// binomial right tails and their numerical inverse, falling factorials,
// Stirling numbers of the second kind, and the occupancy statistics of the
// with-replacement index draws (distribution and mean of the number of
// distinct visited positions).

namespace blob::combinatorics {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer evaluation is served up to this n; larger arguments must go
// through the log-space variants.
inline constexpr unsigned kMaxExactN = 64;

inline double log_binomial_coefficient(std::uint64_t n, std::uint64_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

// P[X >= a] for X ~ Binomial(ell, p). All terms are positive, so summing the
// per-term log-space values (normalized by the largest term) is stable for p
// arbitrarily close to 0 or 1.
inline double bino_tail(std::uint64_t ell, std::uint64_t a, double p) {
    if (ell < 1) throw std::domain_error("bino_tail: ell must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("bino_tail: p must lie in [0,1]");
    if (a > ell + 1) throw std::domain_error("bino_tail: a must be <= ell+1");
    if (a == 0) return 1.0;
    if (a == ell + 1) return 0.0;
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;

    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    std::vector<double> log_terms;
    log_terms.reserve(ell - a + 1);
    double log_max = -std::numeric_limits<double>::infinity();
    for (std::uint64_t j = a; j <= ell; ++j) {
        double lt = log_binomial_coefficient(ell, j) +
                    static_cast<double>(j) * log_p +
                    static_cast<double>(ell - j) * log_q;
        log_terms.push_back(lt);
        log_max = std::max(log_max, lt);
    }
    if (log_max == -std::numeric_limits<double>::infinity()) return 0.0;
    double sum = 0.0;
    for (double lt : log_terms) sum += std::exp(lt - log_max);
    double tail = std::exp(log_max) * sum;
    return std::clamp(tail, 0.0, 1.0);
}

// Inverse of bino_tail in its third argument. For 1 <= a <= ell the tail is
// continuous and strictly increasing in p, so plain bisection on [0,1]
// converges; the 200-step cap is far beyond the 1e-12 interval tolerance.
inline double inv_bino_tail(std::uint64_t ell, std::uint64_t a, double target) {
    if (a < 1) throw std::domain_error("inv_bino_tail: a = 0 has constant tail 1, no inverse");
    if (a > ell) throw std::domain_error("inv_bino_tail: a must be <= ell");
    if (!(target > 0.0 && target < 1.0)) {
        throw std::domain_error("inv_bino_tail: target must lie in (0,1)");
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-12; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (bino_tail(ell, a, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// x!/(x-k)!, exactly; 0 when k > x.
inline BigInt falling_factorial(unsigned x, unsigned k) {
    if (k > x) return BigInt(0);
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) result *= (x - i);
    return result;
}

inline double log_falling_factorial(double x, std::uint64_t k) {
    if (k > static_cast<std::uint64_t>(x)) return -std::numeric_limits<double>::infinity();
    return std::lgamma(x + 1.0) - std::lgamma(x - static_cast<double>(k) + 1.0);
}

// S(n,k) via the triangle recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).
inline BigInt stirling2(unsigned n, unsigned k) {
    if (n > kMaxExactN) {
        throw resource_error("stirling2: n exceeds the exact-integer cap, use log_stirling2");
    }
    if (k > n) return BigInt(0);
    if (n == 0) return BigInt(k == 0 ? 1 : 0);
    if (k == 0) return BigInt(0);
    std::vector<BigInt> row(k + 1, BigInt(0));
    row[0] = 1; // S(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        unsigned jmax = std::min(i, k);
        for (unsigned j = jmax; j >= 1; --j) {
            row[j] = BigInt(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return row[k];
}

namespace detail {

// One DP pass over the log-space triangle, returning row n up to column kmax.
inline std::vector<double> log_stirling2_row(std::uint64_t n, std::uint64_t kmax) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    auto log_add = [](double a, double b) {
        if (a == -std::numeric_limits<double>::infinity()) return b;
        if (b == -std::numeric_limits<double>::infinity()) return a;
        double m = std::max(a, b);
        return m + std::log1p(std::exp(std::min(a, b) - m));
    };
    std::vector<double> row(kmax + 1, neg_inf);
    row[0] = 0.0; // S(0,0) = 1
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::uint64_t jmax = std::min(i, kmax);
        for (std::uint64_t j = jmax; j >= 1; --j) {
            row[j] = log_add(std::log(static_cast<double>(j)) + row[j], row[j - 1]);
        }
        row[0] = neg_inf;
    }
    return row;
}

} // namespace detail

inline double log_stirling2(std::uint64_t n, std::uint64_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    return detail::log_stirling2_row(n, k)[k];
}

// Closed-form expected number of distinct positions after `draws` uniform
// draws with replacement from `population` slots.
inline double expected_visited(double population, double draws) {
    if (population < 1.0) throw std::domain_error("expected_visited: population must be >= 1");
    return population * -std::expm1(draws * std::log1p(-1.0 / population));
}

struct VisitStats {
    std::uint64_t population = 0;
    std::uint64_t draws = 0;
    std::vector<double> pmf; // indexed by s = 0..min(draws, population)
    double mean = 0.0;
};

inline constexpr std::uint64_t kDefaultVisitCap = 4096;

// Distribution of the number of distinct visited positions:
//   P[|V| = s] = (population)_s * S(draws, s) / population^draws,
// evaluated in log space. The mean is cross-checked against the closed form
// before the result is returned.
inline VisitStats visit_stats(std::uint64_t population, std::uint64_t draws,
                              std::uint64_t size_cap = kDefaultVisitCap) {
    if (population < 1) throw std::domain_error("visit_stats: population must be >= 1");
    if (draws > size_cap) {
        throw resource_error("visit_stats: draws exceed the exact-pmf size cap; "
                             "expected_visited() remains available");
    }
    VisitStats stats;
    stats.population = population;
    stats.draws = draws;
    const std::uint64_t smax = std::min(draws, population);
    std::vector<double> log_row = detail::log_stirling2_row(draws, smax);
    const double log_pop = std::log(static_cast<double>(population));
    stats.pmf.resize(smax + 1);
    double mean_sum = 0.0;
    for (std::uint64_t s = 0; s <= smax; ++s) {
        double lp = log_falling_factorial(static_cast<double>(population), s) + log_row[s] -
                    static_cast<double>(draws) * log_pop;
        stats.pmf[s] = std::exp(lp);
        mean_sum += static_cast<double>(s) * stats.pmf[s];
    }
    stats.mean = expected_visited(static_cast<double>(population), static_cast<double>(draws));
    double scale = std::max(1.0, stats.mean);
    if (std::abs(mean_sum - stats.mean) > 1e-9 * scale) {
        throw std::logic_error("visit_stats: pmf mean disagrees with the closed form");
    }
    return stats;
}

} // namespace blob::combinatorics
