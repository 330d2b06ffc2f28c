#pragma once

#include "fockhaus/numeric.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fockhaus {

/// A point mass of weight lambda at location t.
struct Atom {
    double weight;
    double location;
    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Certificate attached to a countable atom family. Atoms 0..truncation-1 are
/// evaluated explicitly; the rest are controlled by the bounds below.
struct AtomTailCertificate {
    std::size_t truncation = 0;
    /// Upper bound for the sum of weight/location over the dropped atoms.
    double tail_bound = 0.0;
    /// Greatest lower bound and least upper bound of the dropped locations.
    /// The dropped atoms must lie strictly on one side of 1.
    double tail_infimum = 1.0;
    double tail_supremum = kInf;
};

/// Integrability data for a user-supplied density phi on (lo, hi):
/// phi(t) = O(t^order_at_zero) as t -> 0 and phi(t) = O(t^growth_at_infinity)
/// as t -> infinity. Only consulted at endpoints that are 0 or infinity.
struct DensityCertificate {
    double order_at_zero = 0.0;
    double growth_at_infinity = 0.0;
};

class MeasureSpec {
public:
    struct PointMasses {
        std::vector<Atom> atoms;  // sorted by location, no duplicates
    };
    struct AtomSeries {
        std::function<Atom(std::size_t)> generator;
        AtomTailCertificate certificate;
        std::vector<Atom> head;  // generator(0..truncation-1), sorted and merged
        std::string label;
    };
    /// phi(t) = t^{-a} on (1, inf).
    struct PowerTail {
        double a;
    };
    /// phi(t) = (t-1)^{b-1} t^{-a} on (1, inf).
    struct BetaTail {
        double a;
        double b;
    };
    /// phi(t) = c on (lo, hi).
    struct ConstantDensity {
        double c;
        double lo;
        double hi;
    };
    struct CustomDensity {
        std::function<double(double)> phi;
        double lo;
        double hi;
        DensityCertificate certificate;
        std::string label;
    };
    struct Mellin;
    struct Scaled;

    using Node = std::variant<PointMasses, AtomSeries, PowerTail, BetaTail, ConstantDensity,
                              CustomDensity, Mellin, Scaled>;

    static MeasureSpec point_masses(std::vector<Atom> atoms);
    static MeasureSpec atom_series(std::function<Atom(std::size_t)> generator,
                                   AtomTailCertificate certificate, std::string label = {});
    static MeasureSpec power_tail(double a);
    static MeasureSpec beta_tail(double a, double b);
    static MeasureSpec constant_density(double c, double lo, double hi);
    static MeasureSpec custom_density(std::function<double(double)> phi, double lo, double hi,
                                      DensityCertificate certificate, std::string label = {});
    static MeasureSpec mellin(MeasureSpec left, MeasureSpec right);
    static MeasureSpec scaled(double c, MeasureSpec inner);

    const Node& node() const;
    /// mu_0, the integral of dmu(t)/t. Always finite.
    double weighted_mass() const { return mu0_; }

    bool is_atomic() const;
    std::string describe() const;

    friend bool operator==(const MeasureSpec& a, const MeasureSpec& b);

private:
    MeasureSpec(std::shared_ptr<const Node> node, double mu0) : node_(std::move(node)), mu0_(mu0) {}
    std::shared_ptr<const Node> node_;
    double mu0_ = 0.0;
};

/// Multiplicative convolution: int g dnu/t = int int g(xy) dmu(x)/x deta(y)/y.
struct MeasureSpec::Mellin {
    MeasureSpec left;
    MeasureSpec right;
};

struct MeasureSpec::Scaled {
    double c;
    MeasureSpec inner;
};

inline const MeasureSpec::Node& MeasureSpec::node() const { return *node_; }

struct SupportReport {
    double inf_support = 0.0;
    double mass_below_1 = 0.0;
    double mass_at_1 = 0.0;
    double mass_unit_interval = 0.0;
    double total_weighted_mass = 0.0;
    /// False when part of a mass was only bounded (countable atom tails below 1).
    bool masses_exact = true;
};

enum class MomentMethod { ClosedForm, Quadrature };

struct MomentEntry {
    double value = 0.0;
    MomentMethod method = MomentMethod::ClosedForm;
    double abs_tol = 0.0;
};

/// mu_n = int t^{-(n+1)} dmu(t), preferring closed forms.
double moment(const MeasureSpec& m, int n);
MomentEntry moment_entry(const MeasureSpec& m, int n);
/// Same quantity, always by quadrature of the defining integral (atoms summed).
double moment_quadrature(const MeasureSpec& m, int n);
/// int t^{-(order+1)} dmu(t) for real order; throws DivergentMoment when the
/// integrability data rules it out.
double real_moment(const MeasureSpec& m, double order);

/// Status of int_{[1,inf)} t^s dmu(t).
struct PowerIntegral {
    enum class Status { Finite, Divergent, Unknown } status = Status::Unknown;
    double value = 0.0;
};
PowerIntegral power_integral_above_one(const MeasureSpec& m, double s);

/// int g(t) dmu(t)/t.
double integrate(const MeasureSpec& m, const std::function<double(double)>& g);
std::complex<double> integrate(const MeasureSpec& m,
                               const std::function<std::complex<double>(double)>& g);

/// mu((0, x)) and mu({x}).
double mass_below(const MeasureSpec& m, double x);
double mass_at(const MeasureSpec& m, double x);

SupportReport support_report(const MeasureSpec& m);

/// Euler Beta B(b, n+a-b+1) via log-gamma.
double beta_moment(double a, double b, int n);

/// Scaled(1/mu_0, m). Throws ZeroMeasure when mu_0 = 0.
MeasureSpec normalize(const MeasureSpec& m);

/// Append-only moment cache, safe for concurrent readers.
class MomentSequence {
public:
    explicit MomentSequence(MeasureSpec m);

    double operator[](int n) const { return entry(n).value; }
    MomentEntry entry(int n) const;
    std::vector<double> values(int count) const;
    int computed() const;
    const MeasureSpec& measure() const { return measure_; }

private:
    MeasureSpec measure_;
    mutable std::mutex mutex_;
    mutable std::vector<MomentEntry> cache_;
};

}  // namespace fockhaus
