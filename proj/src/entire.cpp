#include "fockhaus/entire.hpp"

#include "fockhaus/error.hpp"
#include "fockhaus/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace fockhaus {

namespace {

// Smallest N such that sum_{k>N} x^k/k! <= rel_tol * e^x, or -1 if none up to max_degree.
int exp_series_degree(double x, double rel_tol, int max_degree) {
    if (x == 0.0) return 0;
    const double log_target = x + std::log(rel_tol);
    const double lx = std::log(x);
    for (int N = 0; N <= max_degree; ++N) {
        const double ratio = x / (N + 2.0);
        if (ratio >= 1.0) continue;
        const double log_tail = (N + 1.0) * lx - std::lgamma(N + 2.0) - std::log1p(-ratio);
        if (log_tail <= log_target) return N;
    }
    return -1;
}

}  // namespace

CoeffFunction::CoeffFunction(std::vector<cplx> coeffs, std::string label)
    : coeffs_(std::move(coeffs)), label_(std::move(label)) {
    while (coeffs_.size() > 1 && coeffs_.back() == cplx{}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(cplx{});
}

cplx CoeffFunction::operator()(cplx z) const {
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CoeffFunction monomial(int n) {
    if (n < 0) throw DomainError("monomial degree must be non-negative");
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{});
    c[n] = 1.0;
    return CoeffFunction(std::move(c), "monomial:" + std::to_string(n));
}

int kernel_degree(double beta, cplx a, double disk_radius) {
    if (!(beta > 0.0)) throw DomainError("kernel parameter beta must be positive");
    if (!(disk_radius >= 0.0)) throw DomainError("disk radius must be non-negative");
    const int N = exp_series_degree(beta * std::abs(a) * disk_radius, 1e-14, 500);
    if (N < 0) {
        throw TruncationError("kernel tail cannot reach 1e-14 on radius " + format_number(disk_radius) +
                              " within degree 500");
    }
    return N;
}

double kernel_disk_radius(double beta, cplx a, double alpha, double p_min) {
    if (!(alpha > 0.0) || !(p_min > 0.0)) throw DomainError("kernel disk radius needs alpha > 0 and p_min > 0");
    return beta * std::abs(a) / alpha + std::sqrt(80.0 / (alpha * std::min(p_min, 1.0)));
}

CoeffFunction kernel(double beta, cplx a, double disk_radius) {
    return kernel(beta, a, disk_radius, kernel_degree(beta, a, disk_radius));
}

CoeffFunction kernel(double beta, cplx a, double disk_radius, int N) {
    const int needed = kernel_degree(beta, a, disk_radius);
    if (N < needed) {
        throw TruncationError("kernel degree " + std::to_string(N) + " is below the " +
                              std::to_string(needed) + " terms the tail bound needs");
    }
    const cplx w = beta * std::conj(a);
    std::vector<cplx> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1.0;
    for (int n = 1; n <= N; ++n) c[n] = c[n - 1] * w / static_cast<double>(n);
    return CoeffFunction(std::move(c), "kernel:" + format_number(beta) + ":" + format_number(a.real()) +
                                           ":" + format_number(a.imag()));
}

CoeffFunction dilate(const CoeffFunction& f, double t) {
    if (!(t >= 1.0)) throw DomainError("dilation factor must be >= 1, got " + format_number(t));
    std::vector<cplx> c = f.coeffs();
    double scale = 1.0;
    const double inv = 1.0 / t;
    for (auto& x : c) {
        x *= scale;
        scale *= inv;
    }
    return CoeffFunction(std::move(c), f.label());
}

CoeffFunction rademacher_randomize(const CoeffFunction& f, const std::vector<int>& signs) {
    if (signs.size() < f.degree() + 1) {
        throw DomainError("need " + std::to_string(f.degree() + 1) + " signs, got " +
                          std::to_string(signs.size()));
    }
    std::vector<cplx> c = f.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (signs[n] != 1 && signs[n] != -1) throw DomainError("signs must be +1 or -1");
        c[n] *= static_cast<double>(signs[n]);
    }
    return CoeffFunction(std::move(c), f.label());
}

CoeffFunction gaussian_peak(int n, double alpha, int max_degree) {
    if (n < 1) throw DomainError("peak index must be positive");
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double x = n * (2.0 * n / alpha);
    const int N = exp_series_degree(x, 1e-12, max_degree);
    if (N < 0) {
        throw TruncationError("gaussian peak " + std::to_string(n) + " needs more than " +
                              std::to_string(max_degree) + " terms");
    }
    const double shift = -static_cast<double>(n) * n / (2.0 * alpha);
    const double ln = std::log(static_cast<double>(n));
    std::vector<cplx> c(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) c[k] = std::exp(k * ln - std::lgamma(k + 1.0) + shift);
    return CoeffFunction(std::move(c), "peak:" + std::to_string(n));
}

}  // namespace fockhaus
