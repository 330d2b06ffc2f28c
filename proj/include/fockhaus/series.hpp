#pragma once

#include "fockhaus/measure.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace fockhaus {

/// mu_n <= constant (n+1)^{-exponent} (upper) or >= (lower), for every n >= 0.
struct PowerBound {
    double exponent = 0.0;
    double constant = 0.0;
};

/// Certified decay information for a non-negative sequence. Partial sums
/// alone never certify anything; every verdict traces back to one of these.
struct DecayTag {
    /// mu_n <= geometric_constant * geometric_ratio^n with ratio < 1.
    std::optional<double> geometric_ratio;
    double geometric_constant = 0.0;
    std::optional<PowerBound> upper;
    std::optional<PowerBound> lower;
    /// mu(0,1) > 0: the sequence grows geometrically.
    bool grows = false;
    std::string provenance;
};

DecayTag decay_tag(const MeasureSpec& m);

/// A sequence together with its decay certificate.
struct MomentTerm {
    std::function<double(int)> value;
    DecayTag decay;
    std::string label;

    static MomentTerm from_measure(const MeasureSpec& m);
    static MomentTerm from_moments(std::shared_ptr<const MomentSequence> moments);
    /// constant * ratio^n, exactly.
    static MomentTerm geometric(double constant, double ratio);
    /// constant * (n+1)^{-exponent}, exactly.
    static MomentTerm power(double constant, double exponent);
};

enum class SeriesKind { Sum, Supremum };
enum class SeriesOutcome { Converges, Diverges, Unknown };

/// Verdict on sum_n term_n^power (n+1)^weight (or its supremum).
struct SeriesVerdict {
    std::string series_id;
    SeriesKind kind = SeriesKind::Sum;
    double power = 1.0;
    double weight = 0.0;
    int terms = 0;
    /// Partial sum over n < terms, or running maximum for a supremum.
    double partial = 0.0;
    std::optional<double> tail_bound;
    SeriesOutcome outcome = SeriesOutcome::Unknown;
    std::string witness;
};

inline constexpr int kDefaultSeriesTerms = 10000;

SeriesVerdict series_verdict(const MomentTerm& term, double weight, double power,
                             int N = kDefaultSeriesTerms, SeriesKind kind = SeriesKind::Sum);

std::string series_id(SeriesKind kind, double power, double weight);
std::string to_string(SeriesOutcome o);

}  // namespace fockhaus
