#include "fockhaus/harness.hpp"

#include "fockhaus/classify.hpp"
#include "fockhaus/error.hpp"
#include "fockhaus/hausdorff.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace fockhaus {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Accumulates one inequality lhs <= rhs (1 + slack) over many trials.
struct InequalityTally {
    long trials = 0;
    long violations = 0;
    double worst = kInf;

    void add(double lhs, double rhs, double slack = kInequalitySlack) {
        ++trials;
        const double margin = rhs == 0.0 ? (lhs <= 0.0 ? 0.0 : -kInf) : (rhs - lhs) / std::abs(rhs);
        worst = std::min(worst, margin);
        if (!(lhs <= rhs * (1.0 + slack))) ++violations;
    }
    void merge(const InequalityTally& o) {
        trials += o.trials;
        violations += o.violations;
        worst = std::min(worst, o.worst);
    }
    PropertyResult result(std::string id) const {
        PropertyResult r;
        r.id = std::move(id);
        r.trials = trials;
        r.violations = violations;
        r.worst_margin = worst;
        return r;
    }
};

PropertyResult named(std::string id) {
    PropertyResult r;
    r.id = std::move(id);
    return r;
}

std::string exponent_tag(Exponent e) { return e.is_infinite() ? "inf" : format_number(e.value()); }

}  // namespace

double uniform01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

int worker_count() {
    if (const char* env = std::getenv("FOCK_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& body) {
    if (n <= 0) return;
    const int workers = std::min(worker_count(), n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    auto run = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::vector<CoeffFunction> make_corpus(const CorpusSpec& spec) {
    if (spec.count < 0 || spec.min_degree < 0 || spec.max_degree < spec.min_degree) {
        throw DomainError("corpus needs count >= 0 and 0 <= min_degree <= max_degree");
    }
    std::vector<CoeffFunction> out;
    std::mt19937_64 gen(spec.seed);
    if (spec.special_families) {
        out.push_back(monomial(5));
        out.push_back(kernel(1.0, {1.0, 0.0}, kernel_disk_radius(1.0, {1.0, 0.0}, spec.alpha, 0.5)));
        out.push_back(gaussian_peak(2, spec.alpha));
    }
    const auto span = static_cast<std::uint64_t>(spec.max_degree - spec.min_degree + 1);
    while (static_cast<int>(out.size()) < spec.count) {
        const int degree = spec.min_degree + static_cast<int>(gen() % span);
        std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) {
            const double rad = std::sqrt(uniform01(gen()));
            const double ang = 2.0 * kPi * uniform01(gen());
            x = std::polar(rad, ang);
        }
        out.emplace_back(std::move(c), "random:" + std::to_string(out.size()));
    }
    out.resize(static_cast<std::size_t>(spec.count));
    return out;
}

std::vector<PropertyResult> check_embeddings(const CorpusSpec& corpus) {
    const auto fs = make_corpus(corpus);
    const std::vector<Exponent> grid = {Exponent(0.5), Exponent(1.0), Exponent(2.0), Exponent(4.0),
                                        Exponent::infinity()};
    const std::size_t G = grid.size();
    struct Local {
        InequalityTally p_monotone, q_sup, q_monotone;
    };
    std::vector<Local> local(fs.size());
    parallel_for(static_cast<int>(fs.size()), [&](int i) {
        std::vector<double> N(G * G);
        for (std::size_t a = 0; a < G; ++a)
            for (std::size_t b = 0; b < G; ++b)
                N[a * G + b] = mixed_norm(fs[i], {grid[a], grid[b], corpus.alpha});
        auto& t = local[i];
        for (std::size_t b = 0; b < G; ++b)
            for (std::size_t a1 = 0; a1 < G; ++a1)
                for (std::size_t a2 = a1 + 1; a2 < G; ++a2) t.p_monotone.add(N[a1 * G + b], N[a2 * G + b]);
        for (std::size_t a = 0; a < G; ++a) {
            for (std::size_t b2 = 0; b2 + 1 < G; ++b2) t.q_sup.add(N[a * G + G - 1], N[a * G + b2]);
            for (std::size_t b1 = 0; b1 < G; ++b1) {
                for (std::size_t b2 = b1 + 1; b2 < G; ++b2) {
                    const double q1 = grid[b1].value();
                    const Exponent q2 = grid[b2];
                    const double c = q2.is_infinite() ? 1.0 : std::pow(q2.value() / q1, 1.0 / q2.value());
                    t.q_monotone.add(N[a * G + b2], c * N[a * G + b1]);
                }
            }
        }
    });
    Local total;
    for (const auto& l : local) {
        total.p_monotone.merge(l.p_monotone);
        total.q_sup.merge(l.q_sup);
        total.q_monotone.merge(l.q_monotone);
    }
    return {total.p_monotone.result("embedding.inner-index-monotone"),
            total.q_sup.result("embedding.sup-below-outer"),
            total.q_monotone.result("embedding.outer-index-constant")};
}

namespace {

// Log of LHS/RHS for one coefficient estimate.
struct CoefficientEstimate {
    std::string id;
    std::function<double(const CoeffFunction&, double)> log_ratio;
};

std::vector<CoefficientEstimate> coefficient_estimates() {
    std::vector<CoefficientEstimate> out;
    out.push_back({"coeff.f1-weighted-l1", [](const CoeffFunction& f, double alpha) {
                       LogSum s;
                       for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
                           const double a = std::abs(f.coeffs()[n]);
                           if (a == 0.0) continue;
                           s.add(std::log(a) + log_monomial_norm_closed(static_cast<int>(n), Exponent(1.0), alpha) -
                                 0.5 * std::log(n + 1.0));
                       }
                       return s.log_value() - log_fock_norm(f, Exponent(1.0), alpha);
                   }});
    out.push_back({"coeff.finf-weighted-sup", [](const CoeffFunction& f, double alpha) {
                       double best = -kInf;
                       for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
                           const double a = std::abs(f.coeffs()[n]);
                           if (a == 0.0) continue;
                           best = std::max(best, std::log(a) +
                                                     log_monomial_norm_closed(static_cast<int>(n), Exponent::infinity(),
                                                                              alpha) +
                                                     0.5 * std::log(n + 1.0));
                       }
                       return log_fock_norm(f, Exponent::infinity(), alpha) - best;
                   }});
    for (double p : {1.0, 1.5, 2.0}) {
        const Exponent e(p);
        out.push_back({"coeff.fp-upper.p" + exponent_tag(e), [e](const CoeffFunction& f, double alpha) {
                           const double g = 0.5 * (e.reciprocal() - 0.5);
                           return log_fock_norm(f, e, alpha) - log_coeff_weighted_lp(f, e, alpha, g);
                       }});
        out.push_back({"coeff.fp-lower.p" + exponent_tag(e), [e](const CoeffFunction& f, double alpha) {
                           const double g = 0.5 * (0.5 - e.reciprocal());
                           return log_coeff_weighted_lp(f, e, alpha, g) - log_fock_norm(f, e, alpha);
                       }});
    }
    for (double q : {2.0, 4.0}) {
        const Exponent e(q);
        out.push_back({"coeff.fq-lower.q" + exponent_tag(e), [e](const CoeffFunction& f, double alpha) {
                           const double g = 0.5 * (e.reciprocal() - 0.5);
                           return log_coeff_weighted_lp(f, e, alpha, g) - log_fock_norm(f, e, alpha);
                       }});
    }
    for (Exponent e : {Exponent(2.0), Exponent(4.0), Exponent::infinity()}) {
        out.push_back({"coeff.fq-upper.q" + exponent_tag(e), [e](const CoeffFunction& f, double alpha) {
                           const double g = 0.5 * (0.5 - e.reciprocal());
                           return log_fock_norm(f, e, alpha) - log_coeff_weighted_lp(f, e, alpha, g);
                       }});
    }
    return out;
}

CoeffFunction prefix(const CoeffFunction& f, std::size_t degree) {
    std::vector<cplx> c(f.coeffs().begin(), f.coeffs().begin() + std::min(f.coeffs().size(), degree + 1));
    return CoeffFunction(std::move(c), f.label());
}

}  // namespace

std::vector<PropertyResult> check_coefficient_estimates(const CorpusSpec& corpus) {
    const auto fs = make_corpus(corpus);
    const auto estimates = coefficient_estimates();
    const std::size_t E = estimates.size();
    // Per function and estimate: log ratio on the full function and on its half-degree prefix.
    std::vector<double> full(fs.size() * E), half(fs.size() * E);
    parallel_for(static_cast<int>(fs.size()), [&](int i) {
        const auto h = prefix(fs[i], fs[i].degree() / 2);
        for (std::size_t k = 0; k < E; ++k) {
            full[i * E + k] = estimates[k].log_ratio(fs[i], corpus.alpha);
            half[i * E + k] = estimates[k].log_ratio(h, corpus.alpha);
        }
    });
    std::vector<PropertyResult> out;
    for (std::size_t k = 0; k < E; ++k) {
        PropertyResult r;
        r.id = estimates[k].id;
        double worst_full = -kInf, worst_half = -kInf;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            ++r.trials;
            const double a = full[i * E + k], b = half[i * E + k];
            if (!std::isfinite(a)) ++r.violations;
            worst_full = std::max(worst_full, a);
            // A prefix can be the zero function (u_5 cut at degree 2); it has no ratio.
            if (std::isfinite(b)) worst_half = std::max(worst_half, b);
        }
        // Stability: doubling the degree may not blow the constant up more than 4x.
        const double limit = std::log(4.0) + std::max(worst_half, 0.0);
        if (!(worst_full <= limit)) ++r.violations;
        r.worst_margin = 1.0 - std::exp(worst_full - limit);
        r.measured_constant = std::exp(worst_full);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PropertyResult> check_khintchine(const CorpusSpec& corpus, int sign_samples, Exponent q) {
    if (sign_samples < 1) throw DomainError("khintchine check needs at least one sign sample");
    if (q.is_infinite()) throw DomainError("khintchine check needs q < inf");
    const auto fs = make_corpus(corpus);
    const double qv = q.value();
    std::vector<double> log_ratio(fs.size());
    parallel_for(static_cast<int>(fs.size()), [&](int i) {
        std::mt19937_64 gen(corpus.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i) + 1);
        const std::size_t len = fs[i].degree() + 1;
        LogSum acc;
        std::vector<int> signs(len);
        for (int s = 0; s < sign_samples; ++s) {
            for (auto& x : signs) x = (gen() >> 63) ? 1 : -1;
            acc.add(qv * log_fock_norm(rademacher_randomize(fs[i], signs), q, corpus.alpha));
        }
        const double lhs = (acc.log_value() - std::log(static_cast<double>(sign_samples))) / qv;
        log_ratio[i] = lhs - log_mixed_norm(fs[i], {Exponent(2.0), q, corpus.alpha});
    });
    PropertyResult r;
    r.id = "khintchine.q" + exponent_tag(q);
    double lo = kInf, hi = -kInf;
    for (double lr : log_ratio) {
        ++r.trials;
        const double ratio = std::exp(lr);
        if (!(ratio >= 0.1 && ratio <= 10.0)) ++r.violations;
        r.worst_margin = std::min({r.worst_margin, (10.0 - ratio) / 10.0, (ratio - 0.1) / ratio});
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    PropertyResult low = r, high = r;
    low.id += ".min-ratio";
    low.measured_constant = lo;
    high.id += ".max-ratio";
    high.measured_constant = hi;
    return {low, high};
}

double dilation_slope(Exponent p, Exponent q, double alpha, const std::vector<double>& ts, int n_max) {
    if (ts.size() < 2) throw DomainError("slope fit needs at least two dilation factors");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double t : ts) {
        const double x = std::log(1.0 - 1.0 / (t * t));
        const double y = std::log(dilation_opnorm_estimate(t, p, q, alpha, n_max).value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(ts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<PropertyResult> check_contraction_and_dilation(const MeasureSpec& m, const CorpusSpec& corpus) {
    const auto support = support_report(m);
    if (support.mass_below_1 > 0.0 || support.inf_support < 1.0) {
        throw DomainError("contraction check needs support in [1, inf)");
    }
    const HausdorffOperator op(m.weighted_mass() == 1.0 ? m : normalize(m));
    const auto fs = make_corpus(corpus);
    const std::vector<Exponent> ps = {Exponent(0.5), Exponent(1.0), Exponent(2.0), Exponent::infinity()};
    const std::vector<double> dilations = {1.0, 1.05, 1.5, 3.0};
    const std::vector<FockParams> spaces = {{Exponent(1.0), Exponent(1.0), corpus.alpha},
                                            {Exponent(2.0), Exponent(2.0), corpus.alpha},
                                            {Exponent(0.5), Exponent(2.0), corpus.alpha},
                                            {Exponent(2.0), Exponent(1.0), corpus.alpha},
                                            {Exponent(1.0), Exponent::infinity(), corpus.alpha}};
    struct Local {
        InequalityTally contraction, dilation;
    };
    std::vector<Local> local(fs.size());
    parallel_for(static_cast<int>(fs.size()), [&](int i) {
        const auto& f = fs[i];
        const auto g = apply_spectral(op, f);
        const double R = 2.0 + std::sqrt(2.0 * (f.degree() + 1.0) / corpus.alpha);
        for (int k = 0; k < 64; ++k) {
            const double r = R * k / 63.0;
            for (const auto p : ps) local[i].contraction.add(circle_mean(g, p, r), circle_mean(f, p, r));
        }
        for (const auto& sp : spaces) {
            const double base = mixed_norm(f, sp);
            for (double t : dilations) local[i].dilation.add(mixed_norm(dilate(f, t), sp), base);
        }
    });
    Local total;
    for (const auto& l : local) {
        total.contraction.merge(l.contraction);
        total.dilation.merge(l.dilation);
    }
    std::vector<PropertyResult> out = {total.contraction.result("contraction.circle-mean"),
                                       total.dilation.result("dilation.non-expansive")};

    // Two-sided estimate shapes: record the constants, assert only that the
    // monomial estimate never drops below the u_0 value 1.
    std::vector<double> ts;
    for (int k = 1; k <= 20; ++k) ts.push_back(1.0 + 0.01 * k);
    const std::pair<Exponent, Exponent> pairs[] = {{Exponent(1.0), Exponent(2.0)}, {Exponent(2.0), Exponent::infinity()}};
    for (const auto& [p, q] : pairs) {
        const std::string tag = ".p" + exponent_tag(p) + "q" + exponent_tag(q);
        auto lower = named("dilation.lower-constant" + tag);
        auto upper = named("dilation.upper-constant" + tag);
        double c1 = kInf, c2 = 0.0;
        std::vector<double> all_ts = ts;
        for (double t : {1.5, 2.0, 4.0}) all_ts.push_back(t);
        for (double t : all_ts) {
            const auto b = dilation_opnorm_bounds(t, p, q, corpus.alpha);
            const double est = dilation_opnorm_estimate(t, p, q, corpus.alpha, 4000).value;
            ++lower.trials;
            ++upper.trials;
            if (!(est >= 1.0 - 1e-12)) ++lower.violations;
            lower.worst_margin = std::min(lower.worst_margin, est - 1.0);
            c1 = std::min(c1, est / b.lower);
            c2 = std::max(c2, est / b.upper);
        }
        upper.worst_margin = lower.worst_margin;
        upper.violations = lower.violations;
        lower.measured_constant = c1;
        upper.measured_constant = c2;
        out.push_back(lower);
        out.push_back(upper);

        const double slope = dilation_slope(p, q, corpus.alpha, ts);
        const double lo = q.reciprocal() - p.reciprocal() - 0.1;
        const double hi = 0.5 * (q.reciprocal() - p.reciprocal()) + 0.1;
        auto s = named("dilation.slope" + tag);
        s.trials = 1;
        s.violations = (slope >= lo && slope <= hi) ? 0 : 1;
        s.worst_margin = std::min(slope - lo, hi - slope);
        s.measured_constant = slope;
        out.push_back(s);
    }
    return out;
}

std::vector<PropertyResult> check_explema(int samples) {
    if (samples < 4) throw DomainError("explema check needs at least 4 grid points");
    struct Family {
        const char* name;
        std::function<double(int)> log_gamma_n;
        double delta;
        bool sup_finite;  // sup_n gamma_n (n+1)^delta < inf, known in closed form
    };
    const std::vector<Family> families = {
        {"(n+1)^-1, delta=1", [](int n) { return -std::log(n + 1.0); }, 1.0, true},
        {"(n+1)^-1/2, delta=1/2", [](int n) { return -0.5 * std::log(n + 1.0); }, 0.5, true},
        {"(n+1)^-2, delta=1", [](int n) { return -2.0 * std::log(n + 1.0); }, 1.0, true},
        {"1, delta=1/2", [](int) { return 0.0; }, 0.5, false},
        {"2^n, delta=0", [](int n) { return n * std::log(2.0); }, 0.0, false},
        {"log(n+2), delta=0", [](int n) { return std::log(std::log(n + 2.0)); }, 0.0, false},
    };
    const double x_min = 1.0, x_max = 1e4;
    std::vector<double> xs;
    for (int k = 0; k < samples; ++k) xs.push_back(x_min * std::pow(x_max / x_min, k / (samples - 1.0)));

    auto r = named("explema.sup-iff-exponential-bound");
    double constant = 0.0;
    for (const auto& fam : families) {
        // log of e^{-x} sum gamma_n (n+1)^delta x^n / n!.
        std::vector<double> log_s;
        for (double x : xs) {
            const int n_max = static_cast<int>(x + 40.0 * std::sqrt(x) + 200.0);
            LogSum s;
            for (int n = 0; n <= n_max; ++n) {
                s.add(fam.log_gamma_n(n) + fam.delta * std::log(n + 1.0) + n * std::log(x) - std::lgamma(n + 1.0));
            }
            log_s.push_back(s.log_value() - x);
        }
        // Bounded when the last point sits within a factor 1.5 of the running
        // maximum over the first half of the log-spaced grid.
        const double early = *std::max_element(log_s.begin(), log_s.begin() + samples / 2);
        const double late = *std::max_element(log_s.begin() + samples / 2, log_s.end());
        const bool bounded = late <= early + std::log(1.5);
        ++r.trials;
        if (bounded != fam.sup_finite) ++r.violations;
        r.worst_margin = std::min(r.worst_margin, fam.sup_finite ? std::log(1.5) + early - late : late - early - std::log(1.5));
        if (fam.sup_finite) constant = std::max(constant, std::exp(*std::max_element(log_s.begin(), log_s.end())));
    }
    r.measured_constant = constant;
    return {r};
}

namespace {

MeasureSpec atoms_inverse_k() {
    // t_k = 1/k, lambda_k = 2^{-k}; tail sum over k > K of lambda_k / t_k = sum k 2^{-k} <= (K+2) 2^{-K}.
    AtomTailCertificate cert;
    cert.truncation = 60;
    cert.tail_bound = 62.0 * std::ldexp(1.0, -60);
    cert.tail_infimum = 0.0;
    cert.tail_supremum = 1.0 / 61.0;
    return MeasureSpec::atom_series(
        [](std::size_t i) {
            const double k = static_cast<double>(i + 1);
            return Atom{std::ldexp(1.0, -static_cast<int>(i + 1)), 1.0 / k};
        },
        cert, "atoms-inverse-k");
}

MeasureSpec atoms_shifted(double t0) {
    // t_k = t0 + 1/k, lambda_k = 2^{-k}.
    AtomTailCertificate cert;
    cert.truncation = 60;
    cert.tail_bound = std::ldexp(1.0, -60) / t0;
    cert.tail_infimum = t0;
    cert.tail_supremum = t0 + 1.0 / 61.0;
    return MeasureSpec::atom_series(
        [t0](std::size_t i) {
            return Atom{std::ldexp(1.0, -static_cast<int>(i + 1)), t0 + 1.0 / static_cast<double>(i + 1)};
        },
        cert, "atoms-shifted:" + format_number(t0));
}

MeasureSpec geometric_from_one() {
    // t_k = 1 + 1/k, lambda_k = 2^{-k}.
    AtomTailCertificate cert;
    cert.truncation = 60;
    cert.tail_bound = std::ldexp(1.0, -60);
    cert.tail_infimum = 1.0;
    cert.tail_supremum = 1.0 + 1.0 / 61.0;
    return MeasureSpec::atom_series(
        [](std::size_t i) {
            return Atom{std::ldexp(1.0, -static_cast<int>(i + 1)), 1.0 + 1.0 / static_cast<double>(i + 1)};
        },
        cert, "atoms-one-plus-inverse-k");
}

}  // namespace

std::vector<std::pair<std::string, MeasureSpec>> measure_corpus() {
    const auto hardy = MeasureSpec::power_tail(1.0);
    return {
        {"hardy", hardy},
        {"power_tail:2.5", MeasureSpec::power_tail(2.5)},
        {"beta:2:1", MeasureSpec::beta_tail(2.0, 1.0)},
        {"beta:2:2", MeasureSpec::beta_tail(2.0, 2.0)},
        {"beta:3:0.5", MeasureSpec::beta_tail(3.0, 0.5)},
        {"dirac:1", MeasureSpec::point_masses({{1.0, 1.0}})},
        {"dirac:2", MeasureSpec::point_masses({{2.0, 2.0}})},
        {"atoms:(1,1),(1,2)", MeasureSpec::point_masses({{1.0, 1.0}, {1.0, 2.0}})},
        {"constant:1:0.5:1", MeasureSpec::constant_density(1.0, 0.5, 1.0)},
        {"constant:2:1:3", MeasureSpec::constant_density(2.0, 1.0, 3.0)},
        {"mellin(hardy,hardy)", MeasureSpec::mellin(hardy, hardy)},
        {"mellin(hardy,dirac:2)", MeasureSpec::mellin(hardy, MeasureSpec::point_masses({{2.0, 2.0}}))},
        {"scaled:3:hardy", MeasureSpec::scaled(3.0, hardy)},
        {"atoms:1+1/k", geometric_from_one()},
        {"atoms:1.5+1/k", atoms_shifted(1.5)},
        {"atoms:1/k", atoms_inverse_k()},
    };
}

std::vector<PropertyResult> check_classifier_on_examples() {
    auto r = named("classifier.examples");
    r.worst_margin = 0.0;
    auto expect = [&](bool ok) {
        ++r.trials;
        if (!ok) ++r.violations;
    };
    const Exponent two(2.0), one(1.0), inf = Exponent::infinity();
    const auto hardy = MeasureSpec::power_tail(1.0);
    const auto dirac1 = MeasureSpec::point_masses({{1.0, 1.0}});
    const auto below = MeasureSpec::constant_density(1.0, 0.5, 1.0);
    const auto geom = geometric_from_one();
    const auto square = MeasureSpec::mellin(hardy, hardy);
    const auto with_one = MeasureSpec::point_masses({{1.0, 1.0}, {1.0, 2.0}});
    const auto shifted = atoms_shifted(1.5);

    for (double alpha : {0.5, 1.0, 2.0}) {
        for (auto [p, q] : {std::pair{one, one}, std::pair{two, two}, std::pair{one, inf}, std::pair{Exponent(0.5), two}}) {
            expect(classify_bounded(hardy, p, q, alpha).verdict == Verdict::Yes);
            expect(classify_compact(hardy, p, q, alpha).verdict == Verdict::Yes);
            expect(classify_bounded(dirac1, p, q, alpha).verdict == Verdict::Yes);
            expect(classify_compact(dirac1, p, q, alpha).verdict == Verdict::No);
            expect(classify_bounded(below, p, q, alpha).verdict == Verdict::No);
            expect(classify_bounded(geom, p, q, alpha).verdict == Verdict::Yes);
            expect(classify_compact(geom, p, q, alpha).verdict == Verdict::Yes);
            expect(classify_bounded(with_one, p, q, alpha).verdict == Verdict::Yes);
            expect(classify_compact(with_one, p, q, alpha).verdict == Verdict::No);
        }
    }
    expect(Classifier(square).summing("summing.absolutely-summing-finf-f1", two, two).verdict == Verdict::Yes);
    expect(Classifier(hardy).summing("summing.absolutely-summing-finf-f1", two, two).verdict == Verdict::No);
    expect(Classifier(square).smoothing("smoothing.finf-to-f1", one, inf, 1.0).verdict == Verdict::SufficientHolds);
    expect(Classifier(MeasureSpec::beta_tail(2.0, 2.0)).smoothing("smoothing.finf-to-f1", one, inf, 1.0).verdict ==
           Verdict::SufficientHolds);
    expect(Classifier(shifted).smoothing("smoothing.finf-to-f1", one, inf, 1.0).verdict == Verdict::SufficientHolds);
    // An atom at 1 keeps mu_n bounded below, so no smoothing criterion can hold.
    for (const auto& rep : smoothing_criteria(with_one, one, inf, 1.0)) {
        expect(rep.verdict == Verdict::NecessaryFails || rep.verdict == Verdict::No);
    }
    for (const auto& rep : summing_criteria(MeasureSpec::point_masses({{2.0, 2.0}}), two, two)) {
        // Geometric moments: every listed series converges, whatever its role.
        bool all_converge = !rep.series.empty();
        for (const auto& sv : rep.series) all_converge = all_converge && sv.outcome == SeriesOutcome::Converges;
        expect(all_converge && rep.verdict != Verdict::No && rep.verdict != Verdict::NecessaryFails);
    }
    expect(classify_entire(hardy).continuity.verdict == Verdict::Yes);
    expect(classify_entire(hardy).compactness.verdict == Verdict::No);
    expect(classify_entire(below).continuity.verdict == Verdict::Yes);
    expect(classify_entire(atoms_inverse_k()).continuity.verdict == Verdict::No);
    const auto gauss = RadialWeight::gaussian(1.0);
    expect(classify_weighted(hardy, gauss, WeightedQuestion::Bounded).verdict == Verdict::Yes);
    expect(classify_weighted(hardy, gauss, WeightedQuestion::Compact).verdict == Verdict::Yes);
    expect(classify_weighted(dirac1, gauss, WeightedQuestion::Bounded).verdict == Verdict::Yes);
    expect(classify_weighted(dirac1, gauss, WeightedQuestion::Compact).verdict == Verdict::No);
    expect(classify_weighted(below, gauss, WeightedQuestion::Bounded).verdict == Verdict::No);
    return {r};
}

std::vector<PropertyResult> check_moment_bracket(int n_max) {
    InequalityTally bracket, monotone, decreasing;
    for (const auto& [name, m] : measure_corpus()) {
        const auto s = support_report(m);
        if (!(s.inf_support > 0.0) || m.weighted_mass() == 0.0) continue;
        const double bound = std::max(m.weighted_mass(), 1.0) / s.inf_support;
        const MomentSequence raw(m);
        const MomentSequence unit(normalize(m));
        double prev_root = unit[1];
        for (int n = 1; n <= n_max; ++n) {
            bracket.add(std::pow(raw[n], 1.0 / n), bound + 1e-12, 0.0);
            const double root = std::pow(unit[n], 1.0 / n);
            if (n > 1) monotone.add(prev_root, root, 1e-12);
            prev_root = root;
            if (s.inf_support >= 1.0) decreasing.add(raw[n], raw[n - 1], 1e-12);
        }
    }
    return {bracket.result("moments.root-bracket"), monotone.result("moments.root-nondecreasing"),
            decreasing.result("moments.nonincreasing")};
}

std::vector<std::string> suite_names() {
    return {"all", "embeddings", "coefficients", "khintchine", "dilation", "explema", "examples", "moments"};
}

std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw SpecError("unknown suite '" + suite + "'");
    }
    std::vector<PropertyResult> out;
    auto take = [&](std::vector<PropertyResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    const bool all = suite == "all";
    if (all || suite == "embeddings") take(check_embeddings({seed, 30, 0, 20}));
    if (all || suite == "coefficients") take(check_coefficient_estimates({seed, 30, 0, 30}));
    if (all || suite == "khintchine") take(check_khintchine({seed, 30, 15, 15}, 256));
    if (all || suite == "dilation") take(check_contraction_and_dilation(MeasureSpec::power_tail(1.0), {seed, 30, 0, 20}));
    if (all || suite == "explema") take(check_explema(64));
    if (all || suite == "examples") take(check_classifier_on_examples());
    if (all || suite == "moments") take(check_moment_bracket());
    return out;
}

std::string csv_header() { return "property_id,trials,violations,worst_margin,measured_constant"; }

std::string to_csv_row(const PropertyResult& r) {
    return r.id + "," + std::to_string(r.trials) + "," + std::to_string(r.violations) + "," +
           format_number(r.worst_margin) + "," + (r.measured_constant ? format_number(*r.measured_constant) : "");
}

}  // namespace fockhaus
