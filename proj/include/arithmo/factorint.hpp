#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "arithmo/errors.hpp"

namespace arithmo {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power decomposition: primes strictly increasing, every
// exponent >= 1, parts empty exactly when n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> parts;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Hard memory cap for sieve construction (uint32 entries, ~400 MB at the cap).
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

// Smallest-prime-factor table for 2..limit. Immutable once built and safe to
// share across threads.
struct SieveTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;  // spf[k] = smallest prime factor of k, 2 <= k <= limit

    bool is_prime(std::uint64_t k) const { return k >= 2 && spf[k] == k; }
};

inline SieveTable build_sieve(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
    if (limit > kMaxSieveLimit)
        throw resource_error("build_sieve: limit " + std::to_string(limit) + " exceeds cap " +
                             std::to_string(kMaxSieveLimit));
    SieveTable table;
    table.limit = limit;
    table.spf.assign(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (table.spf[i] == 0) {
            table.spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > table.spf[i] || i * p > limit) break;
            table.spf[i * p] = p;
        }
    }
    return table;
}

inline Factorization factorize(std::uint64_t n, const SieveTable* sieve = nullptr) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    Factorization out;
    out.n = n;
    std::uint64_t m = n;
    if (sieve != nullptr && n <= sieve->limit) {
        while (m > 1) {
            const std::uint64_t p = sieve->spf[m];
            std::uint32_t a = 0;
            while (m % p == 0) {
                m /= p;
                ++a;
            }
            out.parts.push_back({p, a});
        }
        return out;
    }
    const auto strip = [&](std::uint64_t p) {
        if (m % p != 0) return;
        std::uint32_t a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        out.parts.push_back({p, a});
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= m / d; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) out.parts.push_back({m, 1});
    return out;
}

// All divisors of f.n in strictly increasing order; size is prod(a_i + 1).
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, a] : f.parts) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (std::uint32_t j = 1; j <= a; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline bool coprime(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw std::domain_error("coprime: arguments must be >= 1");
    return std::gcd(a, b) == 1;
}

inline bool is_prime(std::uint64_t n, const SieveTable* sieve = nullptr) {
    if (n == 0) throw std::domain_error("is_prime: n must be >= 1");
    if (n == 1) return false;
    if (sieve != nullptr && n <= sieve->limit) return sieve->is_prime(n);
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

}  // namespace arithmo
