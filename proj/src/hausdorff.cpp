#include "fockhaus/hausdorff.hpp"

#include "fockhaus/error.hpp"
#include "fockhaus/focknorm.hpp"

#include <cmath>

namespace fockhaus {

namespace {

void require_well_defined(const HausdorffOperator& op) {
    if (op.support().inf_support == 0.0) {
        throw IllDefined("support of the measure reaches 0, so sup_n mu_n^{1/n} is infinite and "
                         "H_mu is not defined on entire functions");
    }
}

}  // namespace

HausdorffOperator::HausdorffOperator(MeasureSpec m)
    : measure_(std::move(m)),
      support_(support_report(measure_)),
      moments_(std::make_shared<const MomentSequence>(measure_)) {}

CoeffFunction apply_spectral(const HausdorffOperator& op, const CoeffFunction& f) {
    require_well_defined(op);
    std::vector<cplx> c = f.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] != cplx{}) c[n] *= op.eigenvalue(static_cast<int>(n));
    }
    return CoeffFunction(std::move(c), f.label());
}

std::vector<cplx> apply_quadrature(const HausdorffOperator& op, const CoeffFunction& f,
                                   const std::vector<cplx>& z_samples) {
    require_well_defined(op);
    std::vector<cplx> out;
    out.reserve(z_samples.size());
    for (const cplx z : z_samples) {
        std::function<cplx(double)> g = [&](double t) { return f(z / t); };
        out.push_back(integrate(op.measure(), g));
    }
    return out;
}

DilationBounds dilation_opnorm_bounds(double t, Exponent p, Exponent q, double alpha) {
    if (!(t > 1.0)) throw DomainError("dilation bounds need t > 1, got " + format_number(t));
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (p > q) throw DomainError("dilation bounds need p <= q");
    DilationBounds b;
    const double ip = p.reciprocal(), iq = q.reciprocal();
    b.lower_exponent = 0.5 * iq - 0.5 * ip;
    b.upper_exponent = iq - ip;
    const double base = 1.0 - 1.0 / (t * t);
    b.lower = std::pow(base, b.lower_exponent);
    b.upper = std::pow(t, 2.0 * iq) * std::pow(base, b.upper_exponent);
    return b;
}

DilationEstimate dilation_opnorm_estimate(double t, Exponent p, Exponent q, double alpha, int n_max) {
    if (!(t >= 1.0)) throw DomainError("dilation factor must be >= 1, got " + format_number(t));
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    const double lt = std::log(t);
    double best = -kInf;
    int arg = 0;
    for (int n = 0; n <= n_max; ++n) {
        const double v = -n * lt + log_monomial_norm_closed(n, p, alpha) - log_monomial_norm_closed(n, q, alpha);
        if (v > best) {
            best = v;
            arg = n;
        }
    }
    return {std::exp(best), arg};
}

}  // namespace fockhaus
