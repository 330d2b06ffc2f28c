#pragma once

#include "fockhaus/entire.hpp"
#include "fockhaus/measure.hpp"

#include <memory>
#include <vector>

namespace fockhaus {

/// H_mu f(z) = int f(z/t) dmu(t)/t, diagonal on monomials with eigenvalues mu_n.
class HausdorffOperator {
public:
    explicit HausdorffOperator(MeasureSpec m);

    const MeasureSpec& measure() const { return measure_; }
    const SupportReport& support() const { return support_; }
    const MomentSequence& moments() const { return *moments_; }
    double eigenvalue(int n) const { return (*moments_)[n]; }

private:
    MeasureSpec measure_;
    SupportReport support_;
    std::shared_ptr<const MomentSequence> moments_;
};

/// Coefficient n multiplied by mu_n. IllDefined when the support reaches 0.
CoeffFunction apply_spectral(const HausdorffOperator& op, const CoeffFunction& f);

/// The defining integral evaluated at each sample point.
std::vector<cplx> apply_quadrature(const HausdorffOperator& op, const CoeffFunction& f,
                                   const std::vector<cplx>& z_samples);

/// Shapes of the two-sided estimate for ||D_{1/t}||: F^q_alpha -> F^p_alpha
/// (p <= q), evaluated with unit constants.
struct DilationBounds {
    double lower = 0.0;
    double upper = 0.0;
    double lower_exponent = 0.0;  // of (1 - 1/t^2)
    double upper_exponent = 0.0;
    bool constants_undetermined = true;
};

DilationBounds dilation_opnorm_bounds(double t, Exponent p, Exponent q, double alpha);

struct DilationEstimate {
    double value = 0.0;
    int argmax = 0;
};

/// max_{n <= n_max} t^{-n} ||u_n||_{p,alpha} / ||u_n||_{q,alpha}: a lower bound
/// for the dilation operator norm.
DilationEstimate dilation_opnorm_estimate(double t, Exponent p, Exponent q, double alpha, int n_max);

}  // namespace fockhaus
