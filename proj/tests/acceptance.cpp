// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-fockhaus-cli>

#include "fockhaus/classify.hpp"
#include "fockhaus/focknorm.hpp"
#include "fockhaus/harness.hpp"
#include "fockhaus/hausdorff.hpp"
#include "fockhaus/spec_io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

using namespace fockhaus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome norm_reproduction() {
    const auto t0 = Clock::now();
    double worst = 0.0, worst_inf = 0.0;
    for (double alpha : {0.5, 1.0, 2.0})
        for (double p : {0.5, 1.0, 2.0, 4.0})
            for (int n = 0; n <= 50; ++n)
                worst = std::max(worst, rel_err(fock_norm_quadrature(monomial(n), Exponent(p), alpha),
                                                monomial_norm_closed(n, Exponent(p), alpha)));
    for (double alpha : {0.5, 1.0, 2.0})
        for (int n = 0; n <= 50; ++n)
            worst_inf = std::max(worst_inf, rel_err(fock_norm(monomial(n), Exponent::infinity(), alpha),
                                                    monomial_norm_closed(n, Exponent::infinity(), alpha)));
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << "max rel err " << worst << ", p=inf " << worst_inf << ", " << secs << " s";
    return {worst <= 1e-8 && worst_inf <= 1e-8 && secs < 30.0, d.str()};
}

Outcome kernel_norms() {
    std::mt19937_64 rng(2024);
    const double betas[] = {0.5, 1.0, 1.5, 2.0};
    const double ps[] = {0.5, 1.0, 2.0, 3.0, 4.0};
    const double alphas[] = {0.5, 1.0, 2.0};
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double beta = betas[k % 4], p = ps[k % 5], alpha = alphas[k % 3];
        const cplx a = std::polar(0.3 + 1.2 * uniform01(rng()), 6.283185307179586 * uniform01(rng()));
        const auto K = kernel(beta, a, kernel_disk_radius(beta, a, alpha, std::min(p, 1.0)));
        worst = std::max(worst, rel_err(fock_norm_quadrature(K, Exponent(p), alpha),
                                        kernel_norm_closed(beta, a, Exponent(p), alpha)));
    }
    std::ostringstream d;
    d << "20 combinations, max rel err " << worst;
    return {worst <= 1e-6, d.str()};
}

Outcome spectral_vs_quadrature() {
    const std::vector<std::string> names = {"hardy", "beta:2:1", "dirac:2",
                                            R"({"type":"mellin","left":"hardy","right":"hardy"})"};
    const auto polys = make_corpus({42, 10, 10, 10, false, 1.0});
    std::mt19937_64 rng(99);
    std::vector<cplx> zs;
    for (int k = 0; k < 20; ++k) zs.emplace_back(4.0 * uniform01(rng()) - 2.0, 4.0 * uniform01(rng()) - 2.0);
    double worst = 0.0;
    for (const auto& name : names) {
        const HausdorffOperator op(load_measure(name));
        for (const auto& f : polys) {
            const auto g = apply_spectral(op, f);
            const auto q = apply_quadrature(op, f, zs);
            for (std::size_t k = 0; k < zs.size(); ++k)
                worst = std::max(worst, std::abs(g(zs[k]) - q[k]) / std::abs(g(zs[k])));
        }
    }
    std::ostringstream d;
    d << "4 measures x 10 polynomials x 20 points, max rel err " << worst;
    return {worst <= 1e-8, d.str()};
}

Outcome classifier_table() {
    const Exponent one(1.0), two(2.0);
    struct Row {
        std::string what;
        Verdict got, want;
    };
    const auto hardy = load_measure("hardy");
    const auto dirac1 = load_measure("dirac:1");
    const auto box = MeasureSpec::constant_density(1.0, 0.5, 1.0);
    const auto atoms = load_measure("geom:1:0.5");
    const Classifier sq(load_measure(R"({"type":"mellin","left":"hardy","right":"hardy"})"));
    const std::vector<Row> rows = {
        {"hardy bounded", classify_bounded(hardy, two, two, 1.0).verdict, Verdict::Yes},
        {"hardy compact", classify_compact(hardy, two, two, 1.0).verdict, Verdict::Yes},
        {"dirac(1) bounded", classify_bounded(dirac1, two, two, 1.0).verdict, Verdict::Yes},
        {"dirac(1) compact", classify_compact(dirac1, two, two, 1.0).verdict, Verdict::No},
        {"density (1/2,1) bounded", classify_bounded(box, two, two, 1.0).verdict, Verdict::No},
        {"atoms 1+1/k bounded", classify_bounded(atoms, two, two, 1.0).verdict, Verdict::Yes},
        {"atoms 1+1/k compact", classify_compact(atoms, two, two, 1.0).verdict, Verdict::Yes},
        {"mellin square absolutely summing",
         sq.summing("summing.absolutely-summing-finf-f1", one, one).verdict, Verdict::Yes},
        {"mellin square F^inf -> F^1", sq.smoothing("smoothing.finf-to-f1", one, Exponent::infinity(), 1.0).verdict,
         Verdict::SufficientHolds},
    };
    Outcome o;
    int matched = 0;
    for (const auto& r : rows) {
        if (r.got == r.want) {
            ++matched;
        } else {
            o.pass = false;
            o.detail += r.what + ": got " + to_string(r.got) + ", want " + to_string(r.want) + "; ";
        }
    }
    o.detail += std::to_string(matched) + "/" + std::to_string(rows.size()) + " verdicts match";
    return o;
}

Outcome zero_violations(const std::vector<PropertyResult>& rs, const std::string& prefix) {
    long trials = 0, violations = 0;
    for (const auto& r : rs) {
        if (r.id.rfind(prefix, 0) != 0) continue;
        trials += r.trials;
        violations += r.violations;
    }
    std::ostringstream d;
    d << trials << " checks, " << violations << " violations";
    return {trials > 0 && violations == 0, d.str()};
}

Outcome contraction() {
    return zero_violations(check_contraction_and_dilation(load_measure("hardy"), {42, 30, 0, 20, false, 1.0}),
                           "contraction.");
}

Outcome dilation_slopes() {
    std::vector<double> ts;
    for (int k = 1; k <= 20; ++k) ts.push_back(1.0 + 0.01 * k);
    Outcome o;
    for (auto [p, q] : {std::pair{Exponent(1.0), Exponent(2.0)}, std::pair{Exponent(2.0), Exponent::infinity()}}) {
        const double a = 0.5 * (q.reciprocal() - p.reciprocal()), b = q.reciprocal() - p.reciprocal();
        const double lo = std::min(a, b) - 0.1, hi = std::max(a, b) + 0.1;
        const double s = dilation_slope(p, q, 1.0, ts);
        o.pass = o.pass && s >= lo && s <= hi;
        std::ostringstream d;
        d << "(" << p.to_string() << "," << q.to_string() << ") slope " << s << " in [" << lo << ", " << hi << "]; ";
        o.detail += d.str();
    }
    return o;
}

Outcome embeddings() { return zero_violations(check_embeddings({42, 30, 0, 20, false, 1.0}), "embedding."); }

Outcome moment_bracket() { return zero_violations(check_moment_bracket(100), "moments."); }

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    status = pclose(pipe);
    return out;
}

Outcome determinism(const std::string& cli) {
    const std::string cmd = "'" + cli + "' verify --suite all --seed 42";
    double slowest = 0.0;
    std::string first, second;
    int s1 = 0, s2 = 0;
    auto t0 = Clock::now();
    first = run_capture(cmd, s1);
    slowest = seconds_since(t0);
    t0 = Clock::now();
    second = run_capture(cmd, s2);
    slowest = std::max(slowest, seconds_since(t0));
    long rows = std::count(first.begin(), first.end(), '\n');
    std::ostringstream d;
    d << rows << " CSV lines, " << (first == second ? "identical" : "DIFFERENT") << ", slowest run " << slowest << " s";
    return {s1 == 0 && s2 == 0 && rows > 1 && first == second && slowest < 300.0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <fockhaus-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 monomial norm closed forms", norm_reproduction},
        {"2 kernel norms", kernel_norms},
        {"3 spectral vs quadrature", spectral_vs_quadrature},
        {"4 classifier table", classifier_table},
        {"5 circle-mean contraction", contraction},
        {"6 dilation exponent fit", dilation_slopes},
        {"7 embedding suite", embeddings},
        {"8 moment root bracket", moment_bracket},
        {"9 verify determinism", [&] { return determinism(cli); }},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
