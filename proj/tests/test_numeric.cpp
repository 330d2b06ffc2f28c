#include "fockhaus/error.hpp"
#include "fockhaus/numeric.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace fockhaus;

TEST_CASE("exponent parsing") {
    CHECK(Exponent::parse("inf").is_infinite());
    CHECK(Exponent::parse("1/2").value() == 0.5);
    CHECK(Exponent::parse("2.5").value() == 2.5);
    CHECK(Exponent::infinity().reciprocal() == 0.0);
    CHECK(Exponent(4.0).reciprocal() == 0.25);
    CHECK_THROWS_AS(Exponent::parse("abc"), SpecError);
    CHECK_THROWS_AS(Exponent(0.0), DomainError);
    CHECK_THROWS_AS(Exponent(-1.0), DomainError);
    CHECK(Exponent(1.0) < Exponent::infinity());
}

TEST_CASE("report formatting uses 12 significant digits") {
    CHECK(format_number(std::sqrt(2.0)) == "1.41421356237");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(kInf) == "inf");
}

TEST_CASE("log gamma and log beta agree with the standard library") {
    for (double x : {0.5, 1.0, 2.5, 10.0, 170.5, 1e4}) CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-14));
    CHECK(log_beta(1.0, 1.0) == doctest::Approx(0.0));
    // B(1/2, 1/2) = pi.
    CHECK(std::exp(log_beta(0.5, 0.5)) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("log-sum-exp is exact on representable sums and survives overflow") {
    CHECK(log_add(-kInf, 0.0) == 0.0);
    CHECK(log_add(std::log(2.0), std::log(3.0)) == doctest::Approx(std::log(5.0)));
    LogSum s;
    CHECK(s.empty());
    for (int k = 0; k < 1000; ++k) s.add(800.0);
    CHECK(s.log_value() == doctest::Approx(800.0 + std::log(1000.0)).epsilon(1e-14));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    LogSum t;
    double direct = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double x = u(rng);
        t.add(x);
        direct += std::exp(x);
    }
    CHECK(t.log_value() == doctest::Approx(std::log(direct)).epsilon(1e-13));
}
