#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>

#include "arithmo/identities.hpp"
#include "arithmo/report_io.hpp"
#include "support/naive.hpp"

using namespace arithmo;

namespace {

// Right side of the conjectured eight-function identity, assembled from the
// definitional oracles only.
QValue eq11_rhs_naive(std::uint64_t n) {
    const QValue b_id = naive::convolve(ArithFn::B, ArithFn::id, n);
    const QValue inner = QValue(naive::delta(n)) - 2 * QValue(naive::omega(n)) +
                         QValue(naive::big_b(n)) + QValue(naive::phi_en(n), BigInt(n)) +
                         b_id / QValue(naive::sigma(n));
    return QValue(naive::phi(n)) * inner;
}

}  // namespace

TEST_CASE("theorem1 spot check at (n, m) = (2, 3) for mu") {
    const QValue lhs = naive::convolve(ArithFn::mu, ArithFn::delta, 6);
    const QValue rhs = naive::convolve(ArithFn::id, ArithFn::mu, 2) *
                           naive::convolve(ArithFn::mu, ArithFn::delta, 3) +
                       naive::convolve(ArithFn::id, ArithFn::mu, 3) *
                           naive::convolve(ArithFn::mu, ArithFn::delta, 2);
    CHECK(lhs == 3);
    CHECK(rhs == 3);
}

TEST_CASE("theorem1 degenerate n = 1 pairs hold by inspection") {
    for (ArithFn f : {ArithFn::one, ArithFn::id, ArithFn::mu, ArithFn::tau})
        for (std::uint64_t k = 1; k <= 40; ++k) {
            const QValue lhs = convolve_at(f, ArithFn::delta, k);
            const QValue rhs = convolve_at(ArithFn::id, f, 1) *
                                   convolve_at(f, ArithFn::delta, k) +
                               convolve_at(ArithFn::id, f, k) *
                                   convolve_at(f, ArithFn::delta, 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("theorem1 sweeps hold for the multiplicative catalog") {
    for (ArithFn f : {ArithFn::one, ArithFn::id, ArithFn::mu, ArithFn::phi, ArithFn::tau,
                      ArithFn::sigma}) {
        const IdentityReport report = check_theorem1(f, 60);
        CHECK(report.status == IdentityStatus::holds);
        CHECK(report.mismatches == 0);
        CHECK(report.counterexamples.empty());
        CHECK(report.checked > 0);
    }
}

TEST_CASE("theorem1 rejects non-multiplicative f") {
    CHECK_THROWS_AS(check_theorem1(ArithFn::delta, 50), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem1(ArithFn::B, 50), std::invalid_argument);
}

TEST_CASE("lemma2 matches the worked example at n = 12") {
    // (Id*Id)(12) * (1/2 + 1/6) = 72 * 2/3 = 48
    CHECK(f_star_delta_at(ArithFn::id, 12) == 48);
    CHECK(naive::convolve(ArithFn::id, ArithFn::delta, 12) == 48);
    const IdentityReport report = check_lemma2(ArithFn::id, 12);
    CHECK(report.status == IdentityStatus::holds);
    CHECK(report.checked == 12);
}

TEST_CASE("lemma2 holds with no zero denominators for the catalog") {
    for (ArithFn f : {ArithFn::one, ArithFn::id, ArithFn::mu, ArithFn::phi, ArithFn::tau,
                      ArithFn::sigma}) {
        const IdentityReport report = check_lemma2(f, 1'000);
        CHECK(report.status == IdentityStatus::holds);
        CHECK(report.zero_denominators == 0);
        CHECK(report.checked == 1'000);
    }
}

TEST_CASE("prop6 on the spec points") {
    CHECK(naive::convolve(ArithFn::id, ArithFn::delta, 4) == 6);
    CHECK(QValue(naive::tau(4) * naive::delta(4), 2) == 6);
    CHECK(naive::convolve(ArithFn::id, ArithFn::delta, 1) == 0);
    CHECK(naive::convolve(ArithFn::id, ArithFn::delta, 12) == 48);
    CHECK(QValue(naive::tau(12) * naive::delta(12), 2) == 48);
}

TEST_CASE("prop6 sweep holds and tau(n) delta(n) is even") {
    const IdentityReport report = check_prop6(2'000);
    CHECK(report.status == IdentityStatus::holds);
    CHECK(report.checked == 2'000);
    const SieveTable sieve = build_sieve(2'000);
    for (std::uint64_t n = 1; n <= 2'000; ++n) {
        const BigInt product =
            numerator(eval(ArithFn::tau, n, &sieve) * delta(n, &sieve));
        CHECK(product % 2 == 0);
    }
}

TEST_CASE("series identity coefficients on the spec points") {
    CHECK(2 * naive::convolve(ArithFn::id, ArithFn::delta, 4) ==
          QValue(naive::delta(4) * naive::tau(4)));
    CHECK(2 * naive::convolve(ArithFn::id, ArithFn::delta, 1) == 0);
}

TEST_CASE("series identity holds exactly and within the float bound") {
    const SeriesIdentityResult result = check_series_identity(4.0, 2'000, 2'000);
    CHECK(result.report.status == IdentityStatus::holds);
    CHECK(result.report.checked == 2'000);
    CHECK(result.within_bound);
    CHECK(result.difference <= result.combined_bound);
    CHECK(result.combined_bound < 1e-3);
    CHECK_THROWS_AS(check_series_identity(2.0, 100, 100), std::domain_error);
}

TEST_CASE("eq11 probe records the failure at n = 2 exactly") {
    // settle the small cases with the definitional oracle first
    CHECK(naive::convolve(ArithFn::mu, ArithFn::delta, 1) == 0);
    CHECK(eq11_rhs_naive(1) == 0);
    CHECK(naive::convolve(ArithFn::mu, ArithFn::delta, 2) == 1);
    CHECK(eq11_rhs_naive(2) == QValue(13, 6));

    const IdentityReport report = check_conjecture_eq11(2);
    CHECK(report.checked == 2);
    CHECK(report.status == IdentityStatus::mixed);  // holds at 1, fails at 2
    REQUIRE(report.mismatches == 1);
    REQUIRE(report.counterexamples.size() == 1);
    CHECK(report.counterexamples[0].input == std::vector<std::uint64_t>{2});
    CHECK(report.counterexamples[0].lhs == 1);
    CHECK(report.counterexamples[0].rhs == QValue(13, 6));
    CHECK(report.note.find("B(1) = 0") != std::string::npos);
}

TEST_CASE("eq11 counterexamples re-verify against the naive oracle") {
    const IdentityReport report = check_conjecture_eq11(400);
    CHECK(report.counterexamples.size() == kCounterexampleCap);
    CHECK(report.mismatches > kCounterexampleCap);
    CHECK(std::is_sorted(report.counterexamples.begin(), report.counterexamples.end(),
                         [](const Counterexample& a, const Counterexample& b) {
                             return a.input < b.input;
                         }));
    for (const Counterexample& ce : report.counterexamples) {
        REQUIRE(ce.input.size() == 1);
        const std::uint64_t n = ce.input[0];
        CHECK(ce.lhs == naive::convolve(ArithFn::mu, ArithFn::delta, n));
        CHECK(ce.rhs == eq11_rhs_naive(n));
        CHECK(ce.lhs != ce.rhs);
    }
}

TEST_CASE("leibniz spot values and sweep") {
    CHECK(delta(6) == 5);
    CHECK(QValue(2) * delta(3) + QValue(3) * delta(2) == 5);
    const IdentityReport report = check_leibniz(100);
    CHECK(report.status == IdentityStatus::holds);
    CHECK(report.checked == 100 * 100);
}

TEST_CASE("status is holds exactly when counterexamples are empty") {
    for (const IdentityReport& report :
         {check_leibniz(30), check_prop6(30), check_conjecture_eq11(30),
          check_lemma2(ArithFn::mu, 30), check_theorem1(ArithFn::mu, 30)}) {
        CHECK((report.status == IdentityStatus::holds) == report.counterexamples.empty());
        if (report.status != IdentityStatus::holds) CHECK(report.mismatches > 0);
    }
}

TEST_CASE("reports are deterministic") {
    const auto a = to_json(check_conjecture_eq11(100)).dump();
    const auto b = to_json(check_conjecture_eq11(100)).dump();
    CHECK(a == b);
    const auto c = to_json(check_theorem1(ArithFn::tau, 40)).dump();
    const auto d = to_json(check_theorem1(ArithFn::tau, 40)).dump();
    CHECK(c == d);
}

TEST_CASE("verifiers honor the sieve limit") {
    const VerifyOptions small{1'000};
    CHECK_THROWS_AS(check_leibniz(2'000, small), resource_error);
    CHECK_THROWS_AS(check_prop6(5'000, small), resource_error);
    CHECK_THROWS_AS(check_theorem1(ArithFn::id, 100, small), resource_error);
}
