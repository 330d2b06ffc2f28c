#include "fockhaus/focknorm.hpp"

#include "fockhaus/error.hpp"
#include "fockhaus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace fockhaus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Evaluates f on the circle |z| = r with coefficients rescaled by exp(-L) so
// that the largest |a_n| r^n becomes 1.
class CircleEvaluator {
public:
    explicit CircleEvaluator(const CoeffFunction& f) : coeffs_(f.coeffs()) {
        log_abs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) log_abs_.push_back(c == cplx{} ? -kInf : std::log(std::abs(c)));
        scaled_.resize(coeffs_.size());
    }

    // Returns L = max_n log(|a_n| r^n) and prepares the scaled coefficients.
    double prepare(double r) {
        const double lr = std::log(r);
        double L = -kInf;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) L = std::max(L, log_abs_[n] + n * lr);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (log_abs_[n] == -kInf) {
                scaled_[n] = cplx{};
            } else {
                scaled_[n] = coeffs_[n] / std::abs(coeffs_[n]) * std::exp(log_abs_[n] + n * lr - L);
            }
        }
        return L;
    }

    double abs_at(double theta) const {
        const cplx z = std::polar(1.0, theta);
        cplx acc{};
        for (auto it = scaled_.rbegin(); it != scaled_.rend(); ++it) acc = acc * z + *it;
        return std::abs(acc);
    }

    // log sum_n |a_n| r^n, an upper bound for log M_p(f, r) at every p.
    double log_abs_sum(double r) const {
        const double lr = std::log(r);
        LogSum s;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) s.add(log_abs_[n] + n * lr);
        return s.log_value();
    }

    double log_parseval(double r) const {
        const double lr = std::log(r);
        LogSum s;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) s.add(2.0 * (log_abs_[n] + n * lr));
        return 0.5 * s.log_value();
    }

    double log_constant() const { return log_abs_[0]; }
    std::size_t degree() const { return coeffs_.size() - 1; }

private:
    std::vector<cplx> coeffs_;
    std::vector<double> log_abs_;
    std::vector<cplx> scaled_;
};

template <class F>
double golden_max(F&& g, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        }
    }
    return std::max(g1, g2);
}

double log_circle_mean_impl(CircleEvaluator& ev, Exponent p, double r, int K) {
    if (r == 0.0) return ev.log_constant();
    if (p.value() == 2.0) return ev.log_parseval(r);
    const double L = ev.prepare(r);
    if (L == -kInf) return -kInf;
    const double h = kTwoPi / K;
    if (p.is_infinite()) {
        std::vector<double> vals(K);
        for (int k = 0; k < K; ++k) vals[k] = ev.abs_at(k * h);
        std::vector<int> idx(K);
        std::iota(idx.begin(), idx.end(), 0);
        const int top = std::min(3, K);
        std::partial_sort(idx.begin(), idx.begin() + top, idx.end(),
                          [&](int a, int b) { return vals[a] > vals[b] || (vals[a] == vals[b] && a < b); });
        double best = vals[idx[0]];
        for (int j = 0; j < top; ++j) {
            const double c = idx[j] * h;
            best = std::max(best, golden_max([&](double t) { return ev.abs_at(t); }, c - h, c + h, 1e-13));
        }
        return best > 0.0 ? L + std::log(best) : -kInf;
    }
    const double pv = p.value();
    LogSum s;
    for (int k = 0; k < K; ++k) {
        const double a = ev.abs_at(k * h);
        if (a > 0.0) s.add(pv * std::log(a));
    }
    if (s.empty()) return -kInf;
    return L + (s.log_value() - std::log(static_cast<double>(K))) / pv;
}

double finite_max(std::initializer_list<double> xs) {
    double m = 1.0;
    for (double x : xs)
        if (std::isfinite(x)) m = std::max(m, x);
    return m;
}

// log of alpha q int_0^inf M_p(f,r)^q e^{-alpha q r^2/2} r dr, q finite.
double log_radial_integral(const CoeffFunction& f, Exponent p, double q, double alpha,
                           const QuadratureConfig& cfg) {
    CircleEvaluator ev(f);
    const int K = cfg.angle_nodes_for(f.degree());
    const FockParams params{p, Exponent(q), alpha};
    const double R = radial_cutoff(f.degree(), params);
    const double width = 0.5 / std::sqrt(alpha * finite_max({p.value(), q}));
    const int panels = std::max(1, static_cast<int>(std::ceil(R / width)));
    const double step = R / panels;

    struct Node {
        double r, log_w, bound;
    };
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(panels) * 20);
    auto add_panel = [&](double a, double b) {
        quad::gauss_legendre_20(a, b, [&](double r, double w) {
            const double base = -alpha * q * r * r / 2.0 + std::log(r) + std::log(w);
            nodes.push_back({r, base, q * ev.log_abs_sum(r) + base});
        });
    };
    // With f vanishing to order k at 0 the integrand behaves like r^{q k + 1};
    // a fractional power gets a geometrically split first panel.
    std::size_t k0 = 0;
    while (k0 < f.degree() && f.coeff(k0) == cplx{}) ++k0;
    const double lead = q * static_cast<double>(k0);
    if (k0 > 0 && std::abs(lead - std::round(lead)) > 1e-12) {
        constexpr int kGraded = 24;
        add_panel(0.0, std::ldexp(step, -kGraded));
        for (int j = kGraded; j > 0; --j) add_panel(std::ldexp(step, -j), std::ldexp(step, -j + 1));
    } else {
        add_panel(0.0, step);
    }
    for (int i = 1; i < panels; ++i) add_panel(i * step, (i + 1) * step);
    std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.bound > b.bound; });

    LogSum acc;
    double best = -kInf;
    for (const auto& nd : nodes) {
        if (nd.bound < best - cfg.prune_log_gap) break;
        const double lm = log_circle_mean_impl(ev, p, nd.r, K);
        if (lm == -kInf) continue;
        const double v = q * lm + nd.log_w;
        acc.add(v);
        best = std::max(best, v);
    }
    if (acc.empty()) return -kInf;
    return std::log(alpha * q) + acc.log_value();
}

// log sup_r M_p(f,r) e^{-alpha r^2/2}.
double log_radial_sup(const CoeffFunction& f, Exponent p, double alpha, const QuadratureConfig& cfg) {
    CircleEvaluator ev(f);
    const int K = cfg.angle_nodes_for(f.degree());
    const double R = radial_cutoff(f.degree(), {p, Exponent::infinity(), alpha});
    const int G = std::max(cfg.sup_grid, 8);
    auto g = [&](double r) { return log_circle_mean_impl(ev, p, r, K) - alpha * r * r / 2.0; };
    double best = -kInf;
    int best_k = 0;
    for (int k = 0; k < G; ++k) {
        const double v = g(R * k / (G - 1));
        if (v > best) {
            best = v;
            best_k = k;
        }
    }
    const double lo = R * std::max(0, best_k - 1) / (G - 1);
    const double hi = R * std::min(G - 1, best_k + 1) / (G - 1);
    return std::max(best, golden_max(g, lo, hi, 1e-12 * std::max(1.0, R)));
}

}  // namespace

int QuadratureConfig::angle_nodes_for(std::size_t degree) const {
    int k = angle_nodes > 0 ? angle_nodes : std::max<int>(64, 4 * (static_cast<int>(degree) + 1));
    if (k % 2) ++k;
    return k;
}

double radial_cutoff(std::size_t degree, const FockParams& params) {
    const double m = std::min({params.p.value(), params.q.value(), 1.0});
    return std::sqrt(2.0 * (static_cast<double>(degree) + 40.0) / (params.alpha * m));
}

double log_circle_mean(const CoeffFunction& f, Exponent p, double r, const QuadratureConfig& cfg) {
    if (!(r >= 0.0)) throw DomainError("radius must be non-negative");
    CircleEvaluator ev(f);
    return log_circle_mean_impl(ev, p, r, cfg.angle_nodes_for(f.degree()));
}

double circle_mean(const CoeffFunction& f, Exponent p, double r, const QuadratureConfig& cfg) {
    return std::exp(log_circle_mean(f, p, r, cfg));
}

double log_fock_norm(const CoeffFunction& f, Exponent p, double alpha, const QuadratureConfig& cfg) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (f.is_zero()) return -kInf;
    if (p.value() == 2.0) {
        LogSum s;
        const double la = std::log(alpha);
        for (std::size_t n = 0; n <= f.degree(); ++n) {
            const cplx c = f.coeff(n);
            if (c == cplx{}) continue;
            s.add(2.0 * std::log(std::abs(c)) + std::lgamma(n + 1.0) - n * la);
        }
        return 0.5 * s.log_value();
    }
    if (p.is_infinite()) return log_radial_sup(f, p, alpha, cfg);
    return log_radial_integral(f, p, p.value(), alpha, cfg) / p.value();
}

double fock_norm(const CoeffFunction& f, Exponent p, double alpha, const QuadratureConfig& cfg) {
    return std::exp(log_fock_norm(f, p, alpha, cfg));
}

double fock_norm_quadrature(const CoeffFunction& f, Exponent p, double alpha, const QuadratureConfig& cfg) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (f.is_zero()) return 0.0;
    if (p.is_infinite()) return std::exp(log_radial_sup(f, p, alpha, cfg));
    return std::exp(log_radial_integral(f, p, p.value(), alpha, cfg) / p.value());
}

double log_mixed_norm(const CoeffFunction& f, const FockParams& params, const QuadratureConfig& cfg) {
    if (!(params.alpha > 0.0)) throw DomainError("alpha must be positive");
    if (params.p == params.q) return log_fock_norm(f, params.p, params.alpha, cfg);
    if (f.is_zero()) return -kInf;
    if (params.q.is_infinite()) return log_radial_sup(f, params.p, params.alpha, cfg);
    return log_radial_integral(f, params.p, params.q.value(), params.alpha, cfg) / params.q.value();
}

double mixed_norm(const CoeffFunction& f, const FockParams& params, const QuadratureConfig& cfg) {
    return std::exp(log_mixed_norm(f, params, cfg));
}

double log_monomial_norm_closed(int n, Exponent p, double alpha) {
    if (n < 0) throw DomainError("monomial degree must be non-negative");
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (n == 0) return 0.0;
    if (p.is_infinite()) return 0.5 * n * (std::log(n / alpha) - 1.0);
    const double pv = p.value();
    const double half = n * pv / 2.0;
    return (half * std::log(2.0 / (alpha * pv)) + std::lgamma(half + 1.0)) / pv;
}

double monomial_norm_closed(int n, Exponent p, double alpha) {
    return std::exp(log_monomial_norm_closed(n, p, alpha));
}

double kernel_norm_closed(double beta, cplx a, Exponent, double alpha) {
    if (!(beta > 0.0) || !(alpha > 0.0)) throw DomainError("beta and alpha must be positive");
    return std::exp(beta * beta * std::norm(a) / (2.0 * alpha));
}

double log_coeff_weighted_lp(const CoeffFunction& f, Exponent p, double alpha, double gamma) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double la = std::log(alpha);
    LogSum s;
    double mx = -kInf;
    for (std::size_t n = 0; n <= f.degree(); ++n) {
        const cplx c = f.coeff(n);
        if (c == cplx{}) continue;
        const double lt = std::log(std::abs(c)) + 0.5 * (std::lgamma(n + 1.0) - n * la) + gamma * std::log(n + 1.0);
        mx = std::max(mx, lt);
        if (!p.is_infinite()) s.add(p.value() * lt);
    }
    if (p.is_infinite()) return mx;
    return s.log_value() / p.value();
}

double coeff_weighted_lp(const CoeffFunction& f, Exponent p, double alpha, double gamma) {
    return std::exp(log_coeff_weighted_lp(f, p, alpha, gamma));
}

}  // namespace fockhaus
