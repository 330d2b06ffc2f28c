#pragma once

#include "fockhaus/measure.hpp"
#include "fockhaus/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fockhaus {

enum class Verdict { Yes, No, SufficientHolds, NecessaryFails, Inconclusive };

enum class Question {
    EntireContinuity,
    EntireCompact,
    FockBounded,
    MixedBounded,
    Compact,
    WeightedBounded,
    WeightedCompact,
    Smoothing,
    Summing,
};

std::string to_string(Verdict v);
std::string to_string(Question q);

struct Evidence {
    std::string criterion;
    std::string quantity;
    double value = 0.0;
    std::string threshold;
};

struct ClassReport {
    Question question = Question::FockBounded;
    std::string criterion;
    /// Human-readable statement being decided, e.g. "H_mu: F^inf -> F^1".
    std::string statement;
    std::optional<Exponent> p;
    std::optional<Exponent> q;
    std::optional<double> alpha;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Evidence> evidence;
    std::vector<SeriesVerdict> series;
    std::vector<std::string> notices;
};

struct EntireReport {
    ClassReport continuity;
    ClassReport compactness;
};

/// Radial weight v for H^inf_v. The hypotheses of the compactness criterion
/// are declared, not inferred: lim ||u_n||_v^{1/n} = inf and lim v(tr)/v(r) = 0.
struct RadialWeight {
    std::string name;
    std::function<double(double)> profile;
    std::optional<bool> monomial_growth;
    std::optional<bool> dilation_decay;

    static RadialWeight gaussian(double alpha);
};

enum class WeightedQuestion { Bounded, Compact };

/// Classification of one operator H_mu. Inputs with mu_0 != 1 are normalized
/// first (recorded as a notice); no verdict depends on the scale.
class Classifier {
public:
    explicit Classifier(MeasureSpec m, int series_terms = kDefaultSeriesTerms);

    EntireReport entire() const;
    /// H_mu: F^p_alpha -> F^q_alpha.
    ClassReport bounded(Exponent p, Exponent q, double alpha) const;
    /// H_mu on F^{p,q,alpha}.
    ClassReport mixed_bounded(Exponent p, Exponent q, double alpha) const;
    /// H_mu: F^p_alpha -> F^q_alpha compact.
    ClassReport compact(Exponent p, Exponent q, double alpha) const;
    ClassReport weighted(const RadialWeight& v, WeightedQuestion question) const;

    /// Criteria for H_mu(F^q_alpha) into F^p_alpha (p < q) and for the mixed
    /// targets F^{inf,1,alpha} and F^{2,q,alpha}. Only applicable criteria are listed.
    std::vector<ClassReport> smoothing(Exponent p, Exponent q, double alpha) const;
    /// One criterion; throws CriterionInapplicable outside its parameter range.
    ClassReport smoothing(const std::string& id, Exponent p, Exponent q, double alpha) const;

    std::vector<ClassReport> summing(Exponent p, Exponent q) const;
    ClassReport summing(const std::string& id, Exponent p, Exponent q) const;

    const MeasureSpec& measure() const { return normalized_; }
    const SupportReport& support() const { return support_; }
    const std::vector<std::string>& notices() const { return notices_; }
    const MomentTerm& moments() const { return term_; }

private:
    ClassReport base_report(Question q, std::string criterion, std::string statement) const;

    MeasureSpec original_;
    MeasureSpec normalized_;
    SupportReport support_;
    MomentTerm term_;
    std::vector<std::string> notices_;
    int series_terms_;
    bool zero_ = false;
};

const std::vector<std::string>& smoothing_criterion_ids();
const std::vector<std::string>& summing_criterion_ids();

EntireReport classify_entire(const MeasureSpec& m);
ClassReport classify_bounded(const MeasureSpec& m, Exponent p, Exponent q, double alpha);
ClassReport classify_mixed_bounded(const MeasureSpec& m, Exponent p, Exponent q, double alpha);
ClassReport classify_compact(const MeasureSpec& m, Exponent p, Exponent q, double alpha);
ClassReport classify_weighted(const MeasureSpec& m, const RadialWeight& v,
                              WeightedQuestion question = WeightedQuestion::Bounded);
std::vector<ClassReport> smoothing_criteria(const MeasureSpec& m, Exponent p, Exponent q, double alpha);
std::vector<ClassReport> summing_criteria(const MeasureSpec& m, Exponent p, Exponent q);

}  // namespace fockhaus
