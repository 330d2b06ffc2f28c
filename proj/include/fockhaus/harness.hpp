#pragma once

#include "fockhaus/entire.hpp"
#include "fockhaus/focknorm.hpp"
#include "fockhaus/measure.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fockhaus {

/// Reproducible function corpus: random polynomials with coefficients uniform
/// in the unit disk, optionally preceded by a monomial, a kernel and a peak.
struct CorpusSpec {
    std::uint64_t seed = 42;
    int count = 30;
    int min_degree = 0;
    int max_degree = 20;
    bool special_families = true;
    /// Kernels and peaks are truncated for this alpha.
    double alpha = 1.0;
};

std::vector<CoeffFunction> make_corpus(const CorpusSpec& spec);

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double uniform01(std::uint64_t bits);

struct PropertyResult {
    std::string id;
    long trials = 0;
    long violations = 0;
    /// Smallest relative slack (rhs - lhs)/|rhs| seen; negative means violated.
    double worst_margin = kInf;
    /// Empirical constant for claims that only assert existence.
    std::optional<double> measured_constant;
};

/// Relative slack granted to exact inequalities for quadrature error.
inline constexpr double kInequalitySlack = 1e-9;

std::vector<PropertyResult> check_embeddings(const CorpusSpec& corpus);
std::vector<PropertyResult> check_coefficient_estimates(const CorpusSpec& corpus);
std::vector<PropertyResult> check_khintchine(const CorpusSpec& corpus, int sign_samples, Exponent q = Exponent(1.0));
/// Needs support in [1, inf); the measure is normalized first.
std::vector<PropertyResult> check_contraction_and_dilation(const MeasureSpec& m, const CorpusSpec& corpus);
std::vector<PropertyResult> check_explema(int samples);
std::vector<PropertyResult> check_classifier_on_examples();
std::vector<PropertyResult> check_moment_bracket(int n_max = 100);

/// Measures used by the moment and classifier suites, with display names.
std::vector<std::pair<std::string, MeasureSpec>> measure_corpus();

/// Least-squares slope of log estimate against log(1 - 1/t^2).
double dilation_slope(Exponent p, Exponent q, double alpha, const std::vector<double>& ts, int n_max = 4000);

/// Suites: all, embeddings, coefficients, khintchine, dilation, explema,
/// examples, moments.
std::vector<std::string> suite_names();
std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed);

std::string csv_header();
std::string to_csv_row(const PropertyResult& r);

/// Worker count: FOCK_THREADS if set and positive, else hardware concurrency.
int worker_count();
/// Runs body(i) for i in [0, n) on worker_count() threads. Results must be
/// written to per-index slots so aggregation order stays deterministic.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace fockhaus
