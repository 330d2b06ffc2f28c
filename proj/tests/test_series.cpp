#include "fockhaus/measure.hpp"
#include "fockhaus/series.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace fockhaus;

TEST_CASE("geometric series converges with a bracketing tail") {
    const auto v = series_verdict(MomentTerm::geometric(1.0, 0.5), 0.0, 1.0);
    CHECK(v.outcome == SeriesOutcome::Converges);
    REQUIRE(v.tail_bound.has_value());
    CHECK(v.partial <= 2.0);
    CHECK(v.partial + *v.tail_bound >= 2.0 - 1e-12);
}

TEST_CASE("power series thresholds") {
    const auto hardy = MomentTerm::power(1.0, 1.0);
    CHECK(series_verdict(hardy, 0.0, 1.0).outcome == SeriesOutcome::Diverges);
    CHECK(series_verdict(hardy, -0.5, 1.0).outcome == SeriesOutcome::Converges);
    CHECK(series_verdict(hardy, 0.5, 2.0).outcome == SeriesOutcome::Converges);
    CHECK(series_verdict(hardy, 1.0, 2.0).outcome == SeriesOutcome::Diverges);
    CHECK(series_verdict(hardy, 0.0, 1.0, 1000, SeriesKind::Supremum).outcome == SeriesOutcome::Converges);
    CHECK(series_verdict(hardy, 1.5, 1.0, 1000, SeriesKind::Supremum).outcome == SeriesOutcome::Diverges);
}

TEST_CASE("partial sum plus tail bound brackets zeta(2)") {
    const auto v = series_verdict(MomentTerm::power(1.0, 2.0), 0.0, 1.0, 500);
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    REQUIRE(v.tail_bound.has_value());
    CHECK(v.partial <= zeta2);
    CHECK(v.partial + *v.tail_bound >= zeta2);
}

TEST_CASE("uncertified sequences stay unknown") {
    MomentTerm t;
    t.value = [](int n) { return 1.0 / ((n + 1.0) * (n + 1.0)); };
    t.label = "bare";
    CHECK(series_verdict(t, 0.0, 1.0).outcome == SeriesOutcome::Unknown);
}

TEST_CASE("decay tags of standard measures") {
    const auto hardy = decay_tag(MeasureSpec::power_tail(1.0));
    REQUIRE(hardy.upper.has_value());
    REQUIRE(hardy.lower.has_value());
    CHECK(hardy.upper->exponent == doctest::Approx(1.0));
    CHECK(hardy.lower->exponent == doctest::Approx(1.0));
    CHECK(!hardy.grows);

    const auto dirac2 = decay_tag(MeasureSpec::point_masses({{2.0, 2.0}}));
    REQUIRE(dirac2.geometric_ratio.has_value());
    CHECK(*dirac2.geometric_ratio == doctest::Approx(0.5));

    CHECK(decay_tag(MeasureSpec::point_masses({{1.0, 0.5}})).grows);
}

TEST_CASE("property: beta decay bounds hold against the exact moments") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> ub(0.3, 4.0), ushift(0.2, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double b = ub(rng), a = b + ushift(rng);
        const auto tag = decay_tag(MeasureSpec::beta_tail(a, b));
        REQUIRE(tag.upper.has_value());
        REQUIRE(tag.lower.has_value());
        for (int n = 0; n <= 2000; n += (n < 50 ? 1 : 37)) {
            const double mu = beta_moment(a, b, n);
            CHECK(mu <= tag.upper->constant * std::pow(n + 1.0, -tag.upper->exponent) * (1.0 + 1e-12));
            CHECK(mu >= tag.lower->constant * std::pow(n + 1.0, -tag.lower->exponent) * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("series ids are descriptive") {
    CHECK(series_id(SeriesKind::Sum, 2.0, 0.5) != series_id(SeriesKind::Supremum, 2.0, 0.5));
    CHECK(to_string(SeriesOutcome::Converges) == "Converges");
}
