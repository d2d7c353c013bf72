#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithmo/errors.hpp"
#include "arithmo/factorint.hpp"
#include "arithmo/qvalue.hpp"

namespace arithmo {

// Function catalog. delta is the arithmetic derivative; eps is the Dirichlet
// convolution unit (1 at n=1, 0 elsewhere); one is the constant 1; B(n) is the
// sum of a*p over prime powers p^a exactly dividing n; phi_en(n) is
// n * sum_{p|n} (1 - 1/p), a sum over distinct primes (phi is the analogous
// product, so the two agree at prime powers and differ in general).
enum class ArithFn { delta, id, one, eps, phi, omega, mu, tau, sigma, B, phi_en };

enum class FnClass {
    derivative,
    completely_multiplicative,
    multiplicative,
    additive_like,
    unit,
};

inline constexpr std::array<ArithFn, 11> kCatalog = {
    ArithFn::delta, ArithFn::id,    ArithFn::one, ArithFn::eps,
    ArithFn::phi,   ArithFn::omega, ArithFn::mu,  ArithFn::tau,
    ArithFn::sigma, ArithFn::B,     ArithFn::phi_en,
};

constexpr std::string_view fn_name(ArithFn f) {
    switch (f) {
        case ArithFn::delta: return "delta";
        case ArithFn::id: return "id";
        case ArithFn::one: return "one";
        case ArithFn::eps: return "eps";
        case ArithFn::phi: return "phi";
        case ArithFn::omega: return "omega";
        case ArithFn::mu: return "mu";
        case ArithFn::tau: return "tau";
        case ArithFn::sigma: return "sigma";
        case ArithFn::B: return "B";
        case ArithFn::phi_en: return "phi_en";
    }
    throw std::invalid_argument("fn_name: unknown function id");
}

constexpr FnClass fn_class(ArithFn f) {
    switch (f) {
        case ArithFn::delta: return FnClass::derivative;
        case ArithFn::id: return FnClass::completely_multiplicative;
        case ArithFn::one: return FnClass::completely_multiplicative;
        case ArithFn::eps: return FnClass::unit;
        case ArithFn::phi: return FnClass::multiplicative;
        case ArithFn::omega: return FnClass::additive_like;
        case ArithFn::mu: return FnClass::multiplicative;
        case ArithFn::tau: return FnClass::multiplicative;
        case ArithFn::sigma: return FnClass::multiplicative;
        case ArithFn::B: return FnClass::additive_like;
        case ArithFn::phi_en: return FnClass::additive_like;
    }
    throw std::invalid_argument("fn_class: unknown function id");
}

// True when f(nm) = f(n)f(m) for coprime n, m and f(1) = 1. Covers the unit
// eps as well: the multiplicative prime-power product is valid for it.
constexpr bool is_multiplicative(ArithFn f) {
    const FnClass c = fn_class(f);
    return c == FnClass::multiplicative || c == FnClass::completely_multiplicative ||
           c == FnClass::unit;
}

inline std::optional<ArithFn> fn_from_name(std::string_view name) {
    for (ArithFn f : kCatalog)
        if (fn_name(f) == name) return f;
    return std::nullopt;
}

namespace detail {

inline BigInt pow_int(std::uint64_t base, std::uint32_t exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

// delta(p^a) = a * p^(a-1).
inline BigInt delta_pp(std::uint64_t p, std::uint32_t a) { return BigInt(a) * pow_int(p, a - 1); }

// Prime-power value for the multiplicative catalog functions.
inline BigInt multiplicative_pp(ArithFn f, std::uint64_t p, std::uint32_t a) {
    switch (f) {
        case ArithFn::id: return pow_int(p, a);
        case ArithFn::one: return 1;
        case ArithFn::eps: return 0;
        case ArithFn::phi: return pow_int(p, a) - pow_int(p, a - 1);
        case ArithFn::mu: return a == 1 ? -1 : 0;
        case ArithFn::tau: return BigInt(a) + 1;
        case ArithFn::sigma: return (pow_int(p, a + 1) - 1) / (BigInt(p) - 1);
        default:
            throw unsupported_path_error("multiplicative_pp: " + std::string(fn_name(f)) +
                                         " has no multiplicative prime-power rule");
    }
}

// f(p^j) for any catalog function, with the j = 0 case meaning f(1).
inline BigInt value_at_prime_power(ArithFn f, std::uint64_t p, std::uint32_t j) {
    if (j == 0) {
        switch (f) {
            case ArithFn::delta:
            case ArithFn::omega:
            case ArithFn::B:
            case ArithFn::phi_en: return 0;
            default: return 1;
        }
    }
    switch (f) {
        case ArithFn::delta: return delta_pp(p, j);
        case ArithFn::omega: return 1;
        case ArithFn::B: return BigInt(j) * p;
        case ArithFn::phi_en: return pow_int(p, j) - pow_int(p, j - 1);
        default: return multiplicative_pp(f, p, j);
    }
}

}  // namespace detail

// Arithmetic derivative via the closed form n * sum(a_i / p_i), evaluated as
// the exact integer sum(a_i * n / p_i).
inline QValue delta(std::uint64_t n, const SieveTable* sieve = nullptr) {
    const Factorization fact = factorize(n, sieve);
    BigInt sum = 0;
    for (const auto& [p, a] : fact.parts) sum += BigInt(a) * (n / p);
    return QValue(sum);
}

inline QValue delta_prime_power(std::uint64_t p, std::uint32_t alpha) {
    if (!is_prime(p)) throw std::domain_error("delta_prime_power: p must be prime");
    if (alpha == 0) throw std::invalid_argument("delta_prime_power: alpha must be >= 1");
    return QValue(detail::delta_pp(p, alpha));
}

inline QValue eval(ArithFn f, std::uint64_t n, const SieveTable* sieve = nullptr) {
    if (n == 0) throw std::domain_error("eval: n must be >= 1");
    switch (f) {
        case ArithFn::id: return QValue(n);
        case ArithFn::one: return QValue(1);
        case ArithFn::eps: return QValue(n == 1 ? 1 : 0);
        case ArithFn::delta: return delta(n, sieve);
        default: break;
    }
    const Factorization fact = factorize(n, sieve);
    switch (f) {
        case ArithFn::omega: return QValue(fact.parts.size());
        case ArithFn::B: {
            BigInt sum = 0;
            for (const auto& [p, a] : fact.parts) sum += BigInt(a) * p;
            return QValue(sum);
        }
        case ArithFn::phi_en: {
            // n * sum(1 - 1/p) = sum(n - n/p), exact since p | n.
            BigInt sum = 0;
            for (const auto& [p, a] : fact.parts) sum += BigInt(n - n / p);
            return QValue(sum);
        }
        default: {
            BigInt prod = 1;
            for (const auto& [p, a] : fact.parts) prod *= detail::multiplicative_pp(f, p, a);
            return QValue(prod);
        }
    }
}

// f(p^alpha) without factoring. Legal for the multiplicative classes; delta
// is routed to delta_prime_power.
inline QValue eval_prime_power(ArithFn f, std::uint64_t p, std::uint32_t alpha) {
    if (f == ArithFn::delta) return delta_prime_power(p, alpha);
    if (!is_multiplicative(f))
        throw unsupported_path_error("eval_prime_power: " + std::string(fn_name(f)) +
                                     " has no prime-power rule");
    if (!is_prime(p)) throw std::domain_error("eval_prime_power: p must be prime");
    if (alpha == 0) throw std::invalid_argument("eval_prime_power: alpha must be >= 1");
    return QValue(detail::multiplicative_pp(f, p, alpha));
}

// Product of f over the prime powers of fact; 1 on the empty factorization.
inline QValue eval_multiplicative(ArithFn f, const Factorization& fact) {
    if (!is_multiplicative(f))
        throw unsupported_path_error("eval_multiplicative: " + std::string(fn_name(f)) +
                                     " is not multiplicative");
    BigInt prod = 1;
    for (const auto& [p, a] : fact.parts) prod *= detail::multiplicative_pp(f, p, a);
    return QValue(prod);
}

namespace detail {

// Batch values f(1..limit) as exact integers (every catalog function is
// integer-valued). One pass over the smallest-prime-factor table: each n
// splits as ppow * rest with ppow = spf(n)^e and gcd(ppow, rest) = 1.
inline std::vector<BigInt> batch_eval_int(ArithFn f, std::uint64_t limit,
                                          const SieveTable& sieve) {
    if (limit == 0) throw std::invalid_argument("batch_eval_int: limit must be >= 1");
    if (limit > sieve.limit && limit > 1)
        throw std::invalid_argument("batch_eval_int: sieve smaller than requested range");
    std::vector<BigInt> val(limit + 1);

    switch (f) {
        case ArithFn::one:
            for (std::uint64_t n = 1; n <= limit; ++n) val[n] = 1;
            return val;
        case ArithFn::id:
            for (std::uint64_t n = 1; n <= limit; ++n) val[n] = n;
            return val;
        case ArithFn::eps:
            val[1] = 1;
            return val;
        case ArithFn::delta:
            // delta(p*q) = q + p*delta(q) with p = spf(n), by the Leibniz rule.
            for (std::uint64_t n = 2; n <= limit; ++n) {
                const std::uint64_t p = sieve.spf[n], q = n / p;
                val[n] = p * val[q] + q;
            }
            return val;
        default: break;
    }

    std::vector<std::uint32_t> expo(limit + 1, 0);
    std::vector<std::uint64_t> ppow(limit + 1, 0), rest(limit + 1, 0);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const std::uint64_t p = sieve.spf[n], q = n / p;
        if (q % p == 0) {
            expo[n] = expo[q] + 1;
            ppow[n] = ppow[q] * p;
            rest[n] = rest[q];
        } else {
            expo[n] = 1;
            ppow[n] = p;
            rest[n] = q;
        }
    }

    switch (f) {
        case ArithFn::omega:
            for (std::uint64_t n = 2; n <= limit; ++n)
                val[n] = rest[n] == 1 ? BigInt(1) : val[rest[n]] + 1;
            break;
        case ArithFn::B:
            for (std::uint64_t n = 2; n <= limit; ++n) {
                const BigInt part = BigInt(expo[n]) * sieve.spf[n];
                val[n] = rest[n] == 1 ? part : val[rest[n]] + part;
            }
            break;
        case ArithFn::phi_en:
            // phi_en(n) = (n - n/p) + ppow * phi_en(rest): the new prime
            // contributes n(1 - 1/p) and scaling rest by ppow multiplies the
            // remaining sum by ppow.
            for (std::uint64_t n = 2; n <= limit; ++n)
                val[n] = BigInt(n - n / sieve.spf[n]) + ppow[n] * val[rest[n]];
            break;
        default:
            val[1] = 1;
            for (std::uint64_t n = 2; n <= limit; ++n)
                val[n] = rest[n] == 1 ? multiplicative_pp(f, sieve.spf[n], expo[n])
                                      : val[ppow[n]] * val[rest[n]];
            break;
    }
    return val;
}

}  // namespace detail

// Batch evaluation of f over 1..limit; entry k holds f(k), entry 0 is unused.
inline std::vector<QValue> sieve_range(ArithFn f, std::uint64_t limit, const SieveTable& sieve) {
    if (limit == 0) throw std::invalid_argument("sieve_range: limit must be >= 1");
    if (limit > sieve.limit && limit > 1)
        throw std::invalid_argument("sieve_range: sieve smaller than requested range");
    std::vector<BigInt> ints = detail::batch_eval_int(f, limit, sieve);
    std::vector<QValue> out(limit + 1);
    for (std::uint64_t k = 1; k <= limit; ++k) out[k] = QValue(std::move(ints[k]));
    return out;
}

inline std::vector<QValue> sieve_range(ArithFn f, std::uint64_t limit) {
    if (limit == 0) throw std::invalid_argument("sieve_range: limit must be >= 1");
    if (limit == 1) return {QValue(0), eval(f, 1)};
    const SieveTable sieve = build_sieve(limit);
    return sieve_range(f, limit, sieve);
}

}  // namespace arithmo
