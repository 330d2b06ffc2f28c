#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fockhaus {

using cplx = std::complex<double>;

/// Entire function given by its Taylor coefficients a_0..a_N. Trailing zeros
/// are trimmed; the zero function keeps a single coefficient.
class CoeffFunction {
public:
    CoeffFunction() : coeffs_{0.0} {}
    explicit CoeffFunction(std::vector<cplx> coeffs, std::string label = {});

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::string& label() const { return label_; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx{}; }

    cplx operator()(cplx z) const;

    friend bool operator==(const CoeffFunction& a, const CoeffFunction& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<cplx> coeffs_;
    std::string label_;
};

CoeffFunction monomial(int n);

/// Truncated Taylor expansion of exp(beta z conj(a)), with the degree picked so
/// the dropped tail is below 1e-14 relative on |z| <= disk_radius.
CoeffFunction kernel(double beta, cplx a, double disk_radius);
/// Same, with an explicit degree N; throws TruncationError if N is too small
/// for the tail bound on the disk.
CoeffFunction kernel(double beta, cplx a, double disk_radius, int N);

/// Radius beyond which |K_beta(z,a)|^p e^{-alpha p |z|^2/2} is negligible for
/// every p >= p_min: the Gaussian peak at beta|a|/alpha plus a wide margin.
double kernel_disk_radius(double beta, cplx a, double alpha, double p_min = 1.0);

/// Degree needed for kernel(beta, a, disk_radius); TruncationError beyond 500.
int kernel_degree(double beta, cplx a, double disk_radius);

/// f(z/t) for t >= 1.
CoeffFunction dilate(const CoeffFunction& f, double t);

CoeffFunction rademacher_randomize(const CoeffFunction& f, const std::vector<int>& signs);

/// Truncated expansion of exp(n z - n^2/(2 alpha)); the dropped tail is below
/// 1e-12 relative on |z| <= 2n/alpha. TruncationError if more than max_degree
/// terms would be needed.
CoeffFunction gaussian_peak(int n, double alpha, int max_degree = 2000);

}  // namespace fockhaus
