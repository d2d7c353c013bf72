#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>

#include "arithmo/arithfn.hpp"

namespace arithmo {

// Truncated Dirichlet series sum_{n=1..terms} f(n)/n^s with an upper
// estimate of the truncation error.
struct SeriesSum {
    double value = 0;
    std::uint64_t terms = 0;
    double s = 0;
    double tail_bound = 0;
};

// (f*g)(n) = sum over divisors d of f(d) g(n/d). The oracle of record: every
// fast path must agree with it.
inline QValue convolve_at(ArithFn f, ArithFn g, std::uint64_t n,
                          const SieveTable* sieve = nullptr) {
    QValue total = 0;
    for (std::uint64_t d : divisors(factorize(n, sieve))) total += eval(f, d, sieve) * eval(g, n / d, sieve);
    return total;
}

namespace detail {

inline BigInt convolve_pp_int(ArithFn f, ArithFn g, std::uint64_t p, std::uint32_t m) {
    BigInt total = 0;
    for (std::uint32_t j = 0; j <= m; ++j)
        total += value_at_prime_power(f, p, j) * value_at_prime_power(g, p, m - j);
    return total;
}

}  // namespace detail

// (f*g)(p^m) = sum_{j=0..m} f(p^j) g(p^(m-j)).
inline QValue convolve_prime_power(ArithFn f, ArithFn g, std::uint64_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::domain_error("convolve_prime_power: p must be prime");
    return QValue(detail::convolve_pp_int(f, g, p, m));
}

// Product of (f*g)(p^a) over the prime powers of n. Valid because the
// convolution of multiplicative functions is multiplicative.
inline QValue convolve_multiplicative_at(ArithFn f, ArithFn g, std::uint64_t n,
                                         const SieveTable* sieve = nullptr) {
    if (!is_multiplicative(f) || !is_multiplicative(g))
        throw unsupported_path_error(
            "convolve_multiplicative_at: both functions must be multiplicative, got " +
            std::string(fn_name(f)) + ", " + std::string(fn_name(g)));
    BigInt prod = 1;
    for (const auto& [p, a] : factorize(n, sieve).parts) prod *= detail::convolve_pp_int(f, g, p, a);
    return QValue(prod);
}

// (f*delta)(n) = (Id*f)(n) * sum_i (f*delta)(p_i^a_i) / (Id*f)(p_i^a_i), for
// multiplicative f. Throws fast_path_unavailable when a denominator
// (Id*f)(p^a) vanishes; callers fall back to convolve_at.
inline QValue f_star_delta_at(ArithFn f, std::uint64_t n, const SieveTable* sieve = nullptr) {
    if (!is_multiplicative(f))
        throw unsupported_path_error("f_star_delta_at: " + std::string(fn_name(f)) +
                                     " is not multiplicative");
    BigInt id_f = 1;
    QValue ratio_sum = 0;
    for (const auto& [p, a] : factorize(n, sieve).parts) {
        const BigInt den = detail::convolve_pp_int(ArithFn::id, f, p, a);
        if (den == 0)
            throw fast_path_unavailable("f_star_delta_at: (Id*" + std::string(fn_name(f)) +
                                        ")(" + std::to_string(p) + "^" + std::to_string(a) +
                                        ") = 0");
        id_f *= den;
        ratio_sum += QValue(detail::convolve_pp_int(f, ArithFn::delta, p, a), den);
    }
    return QValue(id_f) * ratio_sum;
}

namespace detail {

// ---------------------------------------------------------------------
// Truncation tails.
//
// Every catalog coefficient obeys an elementary growth bound of the form
//   |f(n)| <= C * n^a            or   |f(n)| <= C * n^a * log2(n),
// so the tail past N is controlled by integral comparison against
// x^(a-s) or x^(a-s) log2(x). With sigma = s - a > 1:
//
//   sum_{n>N} n^-sigma <= int_N^inf x^-sigma dx = N^(1-sigma)/(sigma-1)
//
//   sum_{n>N} log2(n) n^-sigma:
//     (i)  log2(x) <= x^eps/(eps ln 2) with eps = (sigma-1)/2 reduces to a
//          pure power tail, valid for every N >= 1:
//            4 N^((1-sigma)/2) / ((sigma-1)^2 ln 2)
//     (ii) x^-sigma log2(x) is decreasing for x > e^(1/(sigma-1)), so once N
//          is past that point the direct integral applies:
//            N^(1-sigma) (ln N/(sigma-1) + 1/(sigma-1)^2) / ln 2
//     The reported bound is the smaller of the valid candidates.
// ---------------------------------------------------------------------

inline double power_tail(double n, double sigma) {
    if (sigma <= 1) return std::numeric_limits<double>::infinity();
    return std::pow(n, 1 - sigma) / (sigma - 1);
}

inline double log_tail(double n, double sigma) {
    if (sigma <= 1) return std::numeric_limits<double>::infinity();
    const double ln2 = std::log(2.0);
    const double r = sigma - 1;
    double bound = 4 * std::pow(n, -r / 2) / (r * r * ln2);
    if (std::log(n) * r >= 1) {
        const double direct = std::pow(n, -r) * (std::log(n) / r + 1 / (r * r)) / ln2;
        bound = std::min(bound, direct);
    }
    return bound;
}

// |f(n)| <= coeff * n^power * (plain + with_log * log2(n)).
struct GrowthBound {
    double coeff = 1;
    double power = 0;
    bool plain = true;
    bool with_log = false;
    double min_s = 1;  // documented convergence region is s > min_s
};

inline GrowthBound growth_bound(ArithFn f) {
    switch (f) {
        case ArithFn::one:
        case ArithFn::mu: return {1, 0, true, false, 1};
        case ArithFn::omega: return {1, 0, false, true, 1};
        case ArithFn::tau: return {2, 0.5, true, false, 1.5};
        case ArithFn::id:
        case ArithFn::phi:
        case ArithFn::B: return {1, 1, true, false, 2};
        case ArithFn::sigma: return {1, 1, true, true, 2};  // sigma(n) <= n(1 + log2 n)
        case ArithFn::delta:
        case ArithFn::phi_en: return {1, 1, false, true, 2};
        case ArithFn::eps: return {0, 0, true, false, 0};
    }
    throw std::invalid_argument("growth_bound: unknown function id");
}

inline double tail_from_bound(const GrowthBound& g, double n, double s) {
    if (g.coeff == 0) return 0;
    const double sigma = s - g.power;
    double tail = 0;
    if (g.plain) tail += g.coeff * power_tail(n, sigma);
    if (g.with_log) tail += g.coeff * log_tail(n, sigma);
    return tail;
}

inline void check_series_gate(std::string_view name, double s, double min_s,
                              std::uint64_t terms) {
    if (terms == 0) throw std::invalid_argument("series: terms must be >= 1");
    if (!(s > min_s)) {
        char msg[96];
        std::snprintf(msg, sizeof(msg), "series for %.*s requires s > %g",
                      static_cast<int>(name.size()), name.data(), min_s);
        throw std::domain_error(msg);
    }
}

}  // namespace detail

// Partial sum of sum f(n)/n^s in floating point with a truncation-error
// estimate. The convergence region is per function: s > 1 for bounded
// coefficients, s > 1.5 for tau, s > 2 for linear-growth coefficients
// (including delta); eps converges everywhere with a zero tail.
inline SeriesSum series_partial_sum(ArithFn f, double s, std::uint64_t terms) {
    const detail::GrowthBound bound = detail::growth_bound(f);
    detail::check_series_gate(fn_name(f), s, bound.min_s, terms);
    long double acc = 0;
    switch (f) {
        case ArithFn::eps: acc = 1; break;
        case ArithFn::one:
            for (std::uint64_t n = 1; n <= terms; ++n) acc += std::pow(double(n), -s);
            break;
        case ArithFn::id:
            for (std::uint64_t n = 1; n <= terms; ++n) acc += std::pow(double(n), 1 - s);
            break;
        default: {
            const SieveTable sieve = build_sieve(std::max<std::uint64_t>(terms, 2));
            const std::vector<BigInt> vals = detail::batch_eval_int(f, terms, sieve);
            for (std::uint64_t n = 1; n <= terms; ++n)
                acc += vals[n].convert_to<double>() * std::pow(double(n), -s);
            break;
        }
    }
    return {static_cast<double>(acc), terms, s,
            detail::tail_from_bound(bound, static_cast<double>(terms), s)};
}

// Partial sum of sum delta(n) tau(n)/n^s. Gate s > 2 matches the delta
// series; the elementary coefficient bound 2 n^1.5 log2(n) (tau <= 2 sqrt n)
// only yields a finite tail estimate for s > 2.5, so the reported bound is
// infinite on 2 < s <= 2.5.
inline SeriesSum series_partial_sum_delta_tau(double s, std::uint64_t terms) {
    detail::check_series_gate("delta_tau", s, 2, terms);
    const SieveTable sieve = build_sieve(std::max<std::uint64_t>(terms, 2));
    const std::vector<BigInt> deltas = detail::batch_eval_int(ArithFn::delta, terms, sieve);
    const std::vector<BigInt> taus = detail::batch_eval_int(ArithFn::tau, terms, sieve);
    long double acc = 0;
    for (std::uint64_t n = 1; n <= terms; ++n)
        acc += (deltas[n] * taus[n]).convert_to<double>() * std::pow(double(n), -s);
    const detail::GrowthBound bound{2, 1.5, false, true, 2};
    return {static_cast<double>(acc), terms, s,
            detail::tail_from_bound(bound, static_cast<double>(terms), s)};
}

// Partial sum of the zeta series sum 1/n^s, s > 1; tail N^(1-s)/(s-1).
inline SeriesSum zeta_partial(double s, std::uint64_t terms) {
    detail::check_series_gate("zeta", s, 1, terms);
    long double acc = 0;
    for (std::uint64_t n = 1; n <= terms; ++n) acc += std::pow(double(n), -s);
    return {static_cast<double>(acc), terms, s,
            detail::power_tail(static_cast<double>(terms), s)};
}

}  // namespace arithmo
