#pragma once

#include "fockhaus/entire.hpp"
#include "fockhaus/numeric.hpp"

namespace fockhaus {

/// Exponents (p, q) and Gaussian weight alpha of F^{p,q,alpha}; q = p gives F^p_alpha.
struct FockParams {
    Exponent p;
    Exponent q;
    double alpha = 1.0;

    static FockParams fock(Exponent p, double alpha) { return {p, p, alpha}; }
};

/// Angles use the periodic trapezoid rule and radii Gauss-Legendre panels.
/// Both converge geometrically for p an even integer or when f has no zeros
/// near the circles sampled. Otherwise |f|^p has near-cusps and convergence is
/// algebraic: for p <= 1 and random degree-6 polynomials the default grid gives
/// about 1e-5 relative and 4096 angles about 1e-8. Monomials, kernels and
/// peaks only vanish at 0 and stay near machine precision.
struct QuadratureConfig {
    /// Uniform angle grid size; 0 selects 4(degree+1), at least 64.
    int angle_nodes = 0;
    double abs_tol = 1e-12;
    /// Radii sampled before polishing a supremum over r.
    int sup_grid = 512;
    /// Radial nodes whose upper bound sits this many nats under the running
    /// maximum are skipped.
    double prune_log_gap = 40.0;

    int angle_nodes_for(std::size_t degree) const;
};

/// Radial truncation radius sqrt(2(degree+40)/(alpha min(p,q,1))).
double radial_cutoff(std::size_t degree, const FockParams& params);

/// M_p(f, r) = ((1/2pi) int |f(r e^{i theta})|^p d theta)^{1/p}.
double circle_mean(const CoeffFunction& f, Exponent p, double r, const QuadratureConfig& cfg = {});
double log_circle_mean(const CoeffFunction& f, Exponent p, double r, const QuadratureConfig& cfg = {});

/// ||f||_{p,alpha}. p = 2 uses the coefficient series; other p integrate radially.
double fock_norm(const CoeffFunction& f, Exponent p, double alpha, const QuadratureConfig& cfg = {});
double log_fock_norm(const CoeffFunction& f, Exponent p, double alpha, const QuadratureConfig& cfg = {});
/// Same, always through the radial integral (used as an oracle for p = 2).
double fock_norm_quadrature(const CoeffFunction& f, Exponent p, double alpha,
                            const QuadratureConfig& cfg = {});

/// ||f||_{p,q,alpha}; q = inf is sup_r M_p(f,r) e^{-alpha r^2/2}.
double mixed_norm(const CoeffFunction& f, const FockParams& params, const QuadratureConfig& cfg = {});
double log_mixed_norm(const CoeffFunction& f, const FockParams& params, const QuadratureConfig& cfg = {});

/// ||u_n||_{p,alpha} in closed form.
double monomial_norm_closed(int n, Exponent p, double alpha);
double log_monomial_norm_closed(int n, Exponent p, double alpha);

/// ||K_beta(., a)||_{p,alpha} = exp(beta^2 |a|^2 / (2 alpha)), independent of p.
double kernel_norm_closed(double beta, cplx a, Exponent p, double alpha);

/// l_p norm of (a_n sqrt(n!/alpha^n) (n+1)^gamma).
double coeff_weighted_lp(const CoeffFunction& f, Exponent p, double alpha, double gamma);
double log_coeff_weighted_lp(const CoeffFunction& f, Exponent p, double alpha, double gamma);

}  // namespace fockhaus
