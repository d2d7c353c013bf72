#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

#include "arithmo/dirichlet.hpp"
#include "support/naive.hpp"

using namespace arithmo;

namespace {
const std::array<ArithFn, 7> kMultiplicative = {ArithFn::id,  ArithFn::one, ArithFn::eps,
                                                ArithFn::phi, ArithFn::mu,  ArithFn::tau,
                                                ArithFn::sigma};
}

TEST_CASE("convolve_at on the spec points") {
    for (ArithFn f : kCatalog)
        for (ArithFn g : kCatalog) CHECK(convolve_at(f, g, 1) == eval(f, 1) * eval(g, 1));
    CHECK(convolve_at(ArithFn::id, ArithFn::delta, 4) == 6);
    CHECK(convolve_at(ArithFn::mu, ArithFn::one, 6) == 0);
}

TEST_CASE("convolve_at agrees with the naive divisor loop") {
    for (ArithFn f : {ArithFn::mu, ArithFn::delta, ArithFn::phi_en})
        for (ArithFn g : {ArithFn::id, ArithFn::B, ArithFn::sigma})
            for (std::uint64_t n = 1; n <= 150; ++n)
                CHECK(convolve_at(f, g, n) == naive::convolve(f, g, n));
}

TEST_CASE("convolve_prime_power") {
    for (ArithFn f : kCatalog)
        for (ArithFn g : kCatalog)
            CHECK(convolve_prime_power(f, g, 5, 0) == eval(f, 1) * eval(g, 1));
    CHECK(convolve_prime_power(ArithFn::id, ArithFn::delta, 2, 3) == 24);
    CHECK(convolve_prime_power(ArithFn::id, ArithFn::id, 3, 2) == 27);
    CHECK_THROWS_AS(convolve_prime_power(ArithFn::id, ArithFn::one, 4, 2), std::domain_error);

    // agrees with convolve_at at prime powers
    for (ArithFn f : {ArithFn::mu, ArithFn::delta, ArithFn::tau})
        for (ArithFn g : {ArithFn::sigma, ArithFn::delta})
            for (std::uint64_t p : {2, 3, 7})
                for (std::uint32_t m = 0; m <= 5; ++m) {
                    std::uint64_t pm = 1;
                    for (std::uint32_t j = 0; j < m; ++j) pm *= p;
                    CHECK(convolve_prime_power(f, g, p, m) == convolve_at(f, g, pm));
                }
}

TEST_CASE("convolve_multiplicative_at on the spec points") {
    CHECK(convolve_multiplicative_at(ArithFn::one, ArithFn::one, 12) == 6);
    CHECK(convolve_multiplicative_at(ArithFn::id, ArithFn::id, 12) == 72);
    CHECK(convolve_multiplicative_at(ArithFn::mu, ArithFn::id, 12) == 4);
    CHECK_THROWS_AS(convolve_multiplicative_at(ArithFn::delta, ArithFn::one, 6),
                    unsupported_path_error);
    CHECK_THROWS_AS(convolve_multiplicative_at(ArithFn::one, ArithFn::B, 6),
                    unsupported_path_error);
}

TEST_CASE("convolve_multiplicative_at equals the oracle on multiplicative pairs") {
    const SieveTable sieve = build_sieve(2'000);
    for (ArithFn f : kMultiplicative)
        for (ArithFn g : kMultiplicative)
            for (std::uint64_t n = 1; n <= 2'000; n += 7)
                CHECK(convolve_multiplicative_at(f, g, n, &sieve) ==
                      convolve_at(f, g, n, &sieve));
}

TEST_CASE("f_star_delta_at on the spec points") {
    CHECK(f_star_delta_at(ArithFn::id, 12) == 48);
    CHECK(f_star_delta_at(ArithFn::mu, 6) == 3);
    for (ArithFn f : kMultiplicative) CHECK(f_star_delta_at(f, 1) == 0);
    CHECK_THROWS_AS(f_star_delta_at(ArithFn::delta, 6), unsupported_path_error);
    CHECK_THROWS_AS(f_star_delta_at(ArithFn::phi_en, 6), unsupported_path_error);
}

TEST_CASE("f_star_delta_at equals convolve_at(f, delta)") {
    const SieveTable sieve = build_sieve(3'000);
    for (ArithFn f : {ArithFn::one, ArithFn::id, ArithFn::mu, ArithFn::phi, ArithFn::tau,
                      ArithFn::sigma})
        for (std::uint64_t n = 1; n <= 3'000; n += 5)
            CHECK(f_star_delta_at(f, n, &sieve) ==
                  convolve_at(f, ArithFn::delta, n, &sieve));
}

TEST_CASE("convolution is commutative") {
    const SieveTable sieve = build_sieve(500);
    for (std::size_t i = 0; i < kCatalog.size(); ++i)
        for (std::size_t j = i + 1; j < kCatalog.size(); ++j)
            for (std::uint64_t n = 1; n <= 500; n += 3)
                CHECK(convolve_at(kCatalog[i], kCatalog[j], n, &sieve) ==
                      convolve_at(kCatalog[j], kCatalog[i], n, &sieve));
}

TEST_CASE("convolution is associative on {one, id, mu, delta}") {
    const SieveTable sieve = build_sieve(200);
    const std::array<ArithFn, 4> fns = {ArithFn::one, ArithFn::id, ArithFn::mu, ArithFn::delta};
    const auto conv_left = [&](ArithFn f, ArithFn g, ArithFn h, std::uint64_t n) {
        QValue total = 0;
        for (std::uint64_t d : divisors(factorize(n, &sieve)))
            total += convolve_at(f, g, d, &sieve) * eval(h, n / d, &sieve);
        return total;
    };
    const auto conv_right = [&](ArithFn f, ArithFn g, ArithFn h, std::uint64_t n) {
        QValue total = 0;
        for (std::uint64_t d : divisors(factorize(n, &sieve)))
            total += eval(f, d, &sieve) * convolve_at(g, h, n / d, &sieve);
        return total;
    };
    for (ArithFn f : fns)
        for (ArithFn g : fns)
            for (ArithFn h : fns)
                for (std::uint64_t n = 1; n <= 200; n += 7)
                    CHECK(conv_left(f, g, h, n) == conv_right(f, g, h, n));
}

TEST_CASE("eps is the convolution unit") {
    const SieveTable sieve = build_sieve(500);
    for (ArithFn f : kCatalog)
        for (std::uint64_t n = 1; n <= 500; n += 3)
            CHECK(convolve_at(ArithFn::eps, f, n, &sieve) == eval(f, n, &sieve));
}

TEST_CASE("(Id*Id)(n) = n tau(n)") {
    const SieveTable sieve = build_sieve(10'000);
    const auto taus = sieve_range(ArithFn::tau, 10'000, sieve);
    for (std::uint64_t n = 1; n <= 10'000; ++n)
        CHECK(convolve_multiplicative_at(ArithFn::id, ArithFn::id, n, &sieve) ==
              QValue(n) * taus[n]);
}

TEST_CASE("(Id*delta)(p^a) = a(a+1)/2 p^(a-1)") {
    const SieveTable sieve = build_sieve(50);
    for (std::uint64_t p = 2; p <= 50; ++p) {
        if (!sieve.is_prime(p)) continue;
        for (std::uint32_t a = 1; a <= 6; ++a)
            CHECK(convolve_prime_power(ArithFn::id, ArithFn::delta, p, a) ==
                  QValue(BigInt(a) * (a + 1) * detail::pow_int(p, a - 1), 2));
    }
}

TEST_CASE("zeta_partial") {
    CHECK(zeta_partial(3.0, 1).value == 1.0);
    const SeriesSum z2 = zeta_partial(2.0, 1'000'000);
    CHECK(std::abs(z2.value - 1.644934) < 1e-5);
    CHECK(z2.tail_bound <= 1.0000001e-6);

    const SeriesSum a = zeta_partial(3.0, 100'000);
    const SeriesSum b = zeta_partial(3.0, 200'000);
    CHECK(std::abs(a.value - b.value) < 1e-9);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);

    CHECK_THROWS_AS(zeta_partial(1.0, 10), std::domain_error);
    CHECK_THROWS_AS(zeta_partial(0.5, 10), std::domain_error);
    CHECK_THROWS_AS(zeta_partial(2.0, 0), std::invalid_argument);
}

TEST_CASE("series_partial_sum for eps is exactly 1") {
    for (double s : {-3.0, 0.5, 2.0, 10.0}) {
        const SeriesSum sum = series_partial_sum(ArithFn::eps, s, 1);
        CHECK(sum.value == 1.0);
        CHECK(sum.tail_bound == 0.0);
    }
}

TEST_CASE("series partial sums refine within the reported tail bound") {
    struct Case {
        ArithFn f;
        double s;
    };
    for (const auto& [f, s] : {Case{ArithFn::delta, 4.0}, Case{ArithFn::one, 2.0},
                               Case{ArithFn::mu, 1.5}, Case{ArithFn::tau, 2.5},
                               Case{ArithFn::sigma, 3.0}, Case{ArithFn::phi_en, 3.5},
                               Case{ArithFn::omega, 2.0}, Case{ArithFn::B, 3.0},
                               Case{ArithFn::phi, 3.0}, Case{ArithFn::id, 3.0}}) {
        const SeriesSum coarse = series_partial_sum(f, s, 10'000);
        const SeriesSum fine = series_partial_sum(f, s, 20'000);
        CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound);
        CHECK(fine.tail_bound <= coarse.tail_bound);
    }
}

TEST_CASE("delta_tau series refines within the bound at s = 4") {
    const SeriesSum coarse = series_partial_sum_delta_tau(4.0, 10'000);
    const SeriesSum fine = series_partial_sum_delta_tau(4.0, 20'000);
    CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound);
}

TEST_CASE("series convergence gates") {
    CHECK_THROWS_AS(series_partial_sum(ArithFn::delta, 2.0, 100), std::domain_error);
    CHECK_THROWS_AS(series_partial_sum(ArithFn::one, 1.0, 100), std::domain_error);
    CHECK_THROWS_AS(series_partial_sum(ArithFn::tau, 1.5, 100), std::domain_error);
    CHECK_THROWS_AS(series_partial_sum_delta_tau(2.0, 100), std::domain_error);
    CHECK_THROWS_MATCHES(series_partial_sum(ArithFn::delta, 1.9, 100), std::domain_error,
                         Catch::Matchers::Message("series for delta requires s > 2"));
    // the documented gate admits s in (2, 2.5] for delta_tau, with an
    // infinite reported bound there
    const SeriesSum loose = series_partial_sum_delta_tau(2.25, 100);
    CHECK(std::isinf(loose.tail_bound));
}
