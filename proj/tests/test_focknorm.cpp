#include "fockhaus/error.hpp"
#include "fockhaus/focknorm.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace fockhaus;

namespace {

CoeffFunction random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> a(degree + 1);
    for (auto& c : a) c = {u(rng), u(rng)};
    return CoeffFunction(a);
}

}  // namespace

TEST_CASE("monomial norms: radial quadrature against closed form") {
    for (double alpha : {0.5, 1.0, 2.0})
        for (double p : {0.5, 1.0, 2.0, 3.0})
            for (int n : {0, 1, 2, 7, 20, 50}) {
                const auto f = monomial(n);
                CHECK(fock_norm_quadrature(f, Exponent(p), alpha) ==
                      doctest::Approx(monomial_norm_closed(n, Exponent(p), alpha)).epsilon(1e-11));
            }
    // u_1 in F^2_1: sqrt(1!) = 1; u_2: sqrt(2).
    CHECK(monomial_norm_closed(2, Exponent(2.0), 1.0) == doctest::Approx(std::sqrt(2.0)));
    // sup_r r^n e^{-alpha r^2/2} at r^2 = n/alpha.
    for (int n : {1, 4, 30}) {
        const double exact = std::pow(n / 2.0, n / 2.0) * std::exp(-n / 2.0);
        CHECK(fock_norm(monomial(n), Exponent::infinity(), 2.0) == doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("large degrees stay finite in the log domain") {
    const auto f = monomial(300);
    CHECK(log_fock_norm(f, Exponent(1.0), 1.0) ==
          doctest::Approx(log_monomial_norm_closed(300, Exponent(1.0), 1.0)).epsilon(1e-11));
}

TEST_CASE("p = 2 coefficient series agrees with the radial integral (Parseval)") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_poly(rng, 3 + trial);
        CHECK(fock_norm(f, Exponent(2.0), 1.0) ==
              doctest::Approx(fock_norm_quadrature(f, Exponent(2.0), 1.0)).epsilon(1e-11));
    }
}

TEST_CASE("circle mean of 1 + z at r = 1, p = 1 is 4/pi") {
    QuadratureConfig cfg;
    cfg.angle_nodes = 65536;
    const CoeffFunction f({1.0, 1.0});
    CHECK(circle_mean(f, Exponent(1.0), 1.0, cfg) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-8));
    CHECK(circle_mean(f, Exponent::infinity(), 1.0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(circle_mean(f, Exponent(2.0), 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("kernel norms do not depend on p") {
    for (double p : {0.5, 1.0, 2.0, 4.0}) {
        const double alpha = 1.0, beta = 1.0;
        const cplx a(0.8, 0.6);
        const auto K = kernel(beta, a, kernel_disk_radius(beta, a, alpha, 0.5));
        CHECK(fock_norm_quadrature(K, Exponent(p), alpha) ==
              doctest::Approx(kernel_norm_closed(beta, a, Exponent(p), alpha)).epsilon(1e-9));
    }
    CHECK(kernel_norm_closed(1.0, cplx(1, 0), Exponent(3.0), 1.0) == doctest::Approx(std::exp(0.5)));
}

TEST_CASE("property: homogeneity and rotation invariance") {
    // Random polynomials have zeros near the sampled circles, where the angle
    // rule converges only algebraically; see QuadratureConfig.
    QuadratureConfig fine;
    fine.angle_nodes = 4096;
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_poly(rng, 6);
        const cplx c(0.3, -1.2);
        const double phi = 0.9;
        std::vector<cplx> scaled, rotated;
        for (std::size_t n = 0; n <= f.degree(); ++n) {
            scaled.push_back(c * f.coeff(n));
            rotated.push_back(f.coeff(n) * std::polar(1.0, phi * n));
        }
        for (double p : {0.5, 1.0, 3.0, 4.0}) {
            const double base = fock_norm(f, Exponent(p), 1.0, fine);
            const double tol = p < 2.0 ? 1e-7 : 1e-11;
            CHECK(fock_norm(CoeffFunction(scaled), Exponent(p), 1.0, fine) ==
                  doctest::Approx(std::abs(c) * base).epsilon(1e-12));
            CHECK(fock_norm(CoeffFunction(rotated), Exponent(p), 1.0, fine) == doctest::Approx(base).epsilon(tol));
        }
    }
}

TEST_CASE("angle refinement converges for functions with zeros") {
    std::mt19937_64 rng(61);
    const auto f = random_poly(rng, 6);
    QuadratureConfig ref;
    ref.angle_nodes = 1 << 15;
    const double exact = fock_norm(f, Exponent(1.0), 1.0, ref);
    double prev = kInf;
    for (int K : {64, 256, 1024, 4096}) {
        QuadratureConfig cfg;
        cfg.angle_nodes = K;
        const double err = std::abs(fock_norm(f, Exponent(1.0), 1.0, cfg) - exact) / exact;
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-8);
}

TEST_CASE("mixed norm reduces to the Fock norm on the diagonal") {
    std::mt19937_64 rng(29);
    const auto f = random_poly(rng, 8);
    for (double p : {0.5, 1.0, 2.0, 4.0})
        CHECK(mixed_norm(f, FockParams::fock(Exponent(p), 1.5)) ==
              doctest::Approx(fock_norm(f, Exponent(p), 1.5)).epsilon(1e-10));
    CHECK(mixed_norm(f, FockParams::fock(Exponent::infinity(), 1.5)) ==
          doctest::Approx(fock_norm(f, Exponent::infinity(), 1.5)).epsilon(1e-10));
}

TEST_CASE("property: mixed norms decrease in the outer index") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        const auto f = random_poly(rng, 10);
        for (double p : {1.0, 2.0}) {
            double prev = kInf;
            for (double q : {0.5, 1.0, 2.0, 4.0, kInf}) {
                const double v = mixed_norm(f, {Exponent(p), Exponent(q), 1.0});
                CHECK(v <= prev * (1.0 + 1e-9));
                prev = v;
            }
        }
    }
}

TEST_CASE("weighted coefficient norms") {
    // a_n sqrt(n!/alpha^n): u_2 at alpha = 1 gives sqrt(2).
    CHECK(coeff_weighted_lp(monomial(2), Exponent(1.0), 1.0, 0.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(coeff_weighted_lp(monomial(2), Exponent(1.0), 1.0, 1.0) == doctest::Approx(3.0 * std::sqrt(2.0)));
    const CoeffFunction f({3.0, 4.0});
    CHECK(coeff_weighted_lp(f, Exponent(2.0), 1.0, 0.0) == doctest::Approx(5.0));
    CHECK(coeff_weighted_lp(f, Exponent::infinity(), 1.0, 0.0) == doctest::Approx(4.0));
    // p = 2, gamma = 0 is exactly the F^2 norm.
    CHECK(coeff_weighted_lp(f, Exponent(2.0), 1.0, 0.0) == doctest::Approx(fock_norm(f, Exponent(2.0), 1.0)));
}

TEST_CASE("closed-form examples") {
    for (double p : {0.5, 1.0, 3.0, kInf}) {
        CHECK(circle_mean(monomial(4), Exponent(p), 1.7) == doctest::Approx(std::pow(1.7, 4)).epsilon(1e-12));
        CHECK(fock_norm(monomial(0), Exponent(p), 0.7) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(monomial_norm_closed(0, Exponent(p), 2.0) == 1.0);
    }
    CHECK(fock_norm(monomial(2), Exponent(2.0), 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(fock_norm_quadrature(monomial(2), Exponent(2.0), 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(monomial_norm_closed(2, Exponent::infinity(), 1.0) == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-14));
    CHECK(mixed_norm(monomial(1), {Exponent(1.0), Exponent::infinity(), 1.0}) ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
    for (double p : {0.5, 1.0, 4.0})
        for (double q : {0.5, 2.0, 3.0, kInf})
            CHECK(mixed_norm(monomial(6), {Exponent(p), Exponent(q), 1.0}) ==
                  doctest::Approx(monomial_norm_closed(6, Exponent(q), 1.0)).epsilon(1e-10));
    const auto K = kernel(1.0, cplx(1, 0), kernel_disk_radius(1.0, cplx(1, 0), 1.0, 4.0));
    CHECK(fock_norm(K, Exponent(4.0), 1.0) == doctest::Approx(1.6487212707).epsilon(1e-10));
    CHECK(kernel_norm_closed(1.0, cplx(0, 0), Exponent(1.0), 1.0) == 1.0);
    const auto K2 = kernel(2.0, cplx(1, 0), kernel_disk_radius(2.0, cplx(1, 0), 1.0, 1.0));
    CHECK(fock_norm_quadrature(K2, Exponent(1.0), 1.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-8));
    CHECK(coeff_weighted_lp(monomial(0), Exponent(3.0), 1.0, 2.5) == doctest::Approx(1.0));
    // Single term: sqrt(n!/alpha^n) (n+1)^gamma.
    CHECK(coeff_weighted_lp(monomial(5), Exponent(0.5), 2.0, 0.7) ==
          doctest::Approx(std::sqrt(120.0 / 32.0) * std::pow(6.0, 0.7)).epsilon(1e-13));
}

TEST_CASE("monomial norm asymptotics stay in a fixed bracket") {
    // Ratio ||u_n||_{p,alpha} / (sqrt(n!/alpha^n) n^{1/(2p)-1/4}) over n = 5..80;
    // brackets recorded at first build, independent of alpha.
    struct Bracket {
        double p, lo, hi;
    };
    for (const auto& b : {Bracket{0.5, 0.999925250244, 1.12148648813}, Bracket{1.0, 1.12126569901, 1.14767275914},
                          Bracket{2.0, 1.0, 1.0}, Bracket{4.0, 0.861284033988, 0.866336516959}}) {
        for (double alpha : {0.5, 1.0, 2.0})
            for (int n = 5; n <= 80; n += 5) {
                const double scale = 0.5 * (std::lgamma(n + 1.0) - n * std::log(alpha)) + (0.5 / b.p - 0.25) * std::log(n);
                const double r = std::exp(log_fock_norm(monomial(n), Exponent(b.p), alpha) - scale);
                CHECK(r >= b.lo * (1.0 - 1e-9));
                CHECK(r <= b.hi * (1.0 + 1e-9));
            }
    }
}

TEST_CASE("compact inclusion: monomial norm ratios decay geometrically") {
    const double alpha = 2.0, beta = 1.0;
    for (double q : {1.0, 2.0, kInf})
        for (int n : {1, 10, 40}) {
            const double ratio = std::exp(log_monomial_norm_closed(n, Exponent(q), alpha) -
                                          log_monomial_norm_closed(n, Exponent(q), beta));
            CHECK(ratio == doctest::Approx(std::pow(beta / alpha, n / 2.0)).epsilon(1e-12));
        }
}

TEST_CASE("p = 2 quadrature is exact up to degree 100") {
    std::mt19937_64 rng(67);
    for (int degree : {20, 60, 100}) {
        const auto f = random_poly(rng, degree);
        CHECK(fock_norm_quadrature(f, Exponent(2.0), 1.0) == doctest::Approx(fock_norm(f, Exponent(2.0), 1.0)).epsilon(1e-12));
    }
}
