#include "fockhaus/measure.hpp"

#include "fockhaus/error.hpp"
#include "fockhaus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fockhaus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kQuadRelTol = 1e-12;

std::vector<Atom> canonical_atoms(std::vector<Atom> atoms) {
    for (const auto& a : atoms) {
        if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
            throw DomainError("atom weight must be positive and finite, got " +
                              format_number(a.weight));
        }
        if (!(a.location > 0.0) || !std::isfinite(a.location)) {
            throw DomainError("atom location must be positive and finite, got " +
                              format_number(a.location));
        }
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return x.location < y.location; });
    std::vector<Atom> merged;
    for (const auto& a : atoms) {
        if (!merged.empty() && merged.back().location == a.location) {
            merged.back().weight += a.weight;
        } else {
            merged.push_back(a);
        }
    }
    return merged;
}

double atoms_real_moment(const std::vector<Atom>& atoms, double order) {
    double sum = 0.0;
    for (const auto& a : atoms) sum += a.weight * std::exp(-(order + 1.0) * std::log(a.location));
    return sum;
}

// Density nodes expressed in u = log t: the measure dmu(t)/t becomes
// exp(log_phi(u)) du on (u_lo, u_hi).
struct LogDensity {
    std::function<double(double)> log_phi;
    double u_lo;
    double u_hi;
};

std::optional<LogDensity> log_density(const MeasureSpec::Node& node) {
    return std::visit(
        overloaded{
            [](const MeasureSpec::PowerTail& d) -> std::optional<LogDensity> {
                const double a = d.a;
                return LogDensity{[a](double u) { return -a * u; }, 0.0, kInf};
            },
            [](const MeasureSpec::BetaTail& d) -> std::optional<LogDensity> {
                const double a = d.a, b = d.b;
                return LogDensity{
                    [a, b](double u) {
                        if (b == 1.0) return -a * u;
                        return (b - 1.0) * std::log(std::expm1(u)) - a * u;
                    },
                    0.0, kInf};
            },
            [](const MeasureSpec::ConstantDensity& d) -> std::optional<LogDensity> {
                const double lc = std::log(d.c);
                return LogDensity{[lc](double) { return lc; }, std::log(d.lo), std::log(d.hi)};
            },
            [](const MeasureSpec::CustomDensity& d) -> std::optional<LogDensity> {
                auto phi = d.phi;
                return LogDensity{
                    [phi](double u) {
                        const double v = phi(std::exp(u));
                        return v > 0.0 ? std::log(v) : -kInf;
                    },
                    d.lo > 0.0 ? std::log(d.lo) : -kInf, d.hi < kInf ? std::log(d.hi) : kInf};
            },
            [](const auto&) -> std::optional<LogDensity> { return std::nullopt; },
        },
        node);
}

// int t^{-(order+1)} phi(t) dt over the density's support, restricted to u in (lo, hi).
double density_real_moment_quadrature(const LogDensity& d, double order, double lo = -kInf,
                                      double hi = kInf) {
    const double a = std::max(lo, d.u_lo);
    const double b = std::min(hi, d.u_hi);
    if (!(a < b)) return 0.0;
    auto integrand = [&](double u) {
        const double v = std::exp(d.log_phi(u) - order * u);
        return std::isfinite(v) ? v : 0.0;
    };
    return quad::integrate_line(integrand, a, b, {.rel_tol = kQuadRelTol});
}

void check_custom_order(const MeasureSpec::CustomDensity& d, double order) {
    if (d.lo == 0.0 && !(d.certificate.order_at_zero > order)) {
        throw DivergentMoment("density singular at 0: order " + format_number(order) +
                              " needs vanishing order above it, certificate gives " +
                              format_number(d.certificate.order_at_zero));
    }
    if (d.hi == kInf && !(d.certificate.growth_at_infinity < order)) {
        throw DivergentMoment("density growth " + format_number(d.certificate.growth_at_infinity) +
                              " at infinity is not integrable against t^{-" +
                              format_number(order + 1.0) + "}");
    }
}

double real_moment_impl(const MeasureSpec& m, double order, bool force_quadrature);

double density_real_moment(const MeasureSpec::Node& node, double order, bool force_quadrature) {
    auto quadrature = [&]() { return density_real_moment_quadrature(*log_density(node), order); };
    return std::visit(
        overloaded{
            [&](const MeasureSpec::PowerTail& d) {
                if (!(order + d.a > 0.0)) {
                    throw DivergentMoment("power tail a=" + format_number(d.a) +
                                          " has no moment of order " + format_number(order));
                }
                return force_quadrature ? quadrature() : 1.0 / (order + d.a);
            },
            [&](const MeasureSpec::BetaTail& d) {
                const double second = order + d.a - d.b + 1.0;
                if (!(second > 0.0)) {
                    throw DivergentMoment("beta tail moment of order " + format_number(order) +
                                          " diverges");
                }
                return force_quadrature ? quadrature()
                                        : std::exp(log_beta(d.b, second));
            },
            [&](const MeasureSpec::ConstantDensity& d) {
                if (force_quadrature) return quadrature();
                if (order == 0.0) return d.c * std::log(d.hi / d.lo);
                return d.c * (std::pow(d.lo, -order) - std::pow(d.hi, -order)) / order;
            },
            [&](const MeasureSpec::CustomDensity& d) {
                check_custom_order(d, order);
                return quadrature();
            },
            [](const auto&) -> double { throw std::logic_error("not a density"); },
        },
        node);
}

double real_moment_impl(const MeasureSpec& m, double order, bool force_quadrature) {
    return std::visit(
        overloaded{
            [&](const MeasureSpec::PointMasses& p) { return atoms_real_moment(p.atoms, order); },
            [&](const MeasureSpec::AtomSeries& s) { return atoms_real_moment(s.head, order); },
            [&](const MeasureSpec::Mellin& mc) {
                return real_moment_impl(mc.left, order, force_quadrature) *
                       real_moment_impl(mc.right, order, force_quadrature);
            },
            [&](const MeasureSpec::Scaled& s) {
                return s.c * real_moment_impl(s.inner, order, force_quadrature);
            },
            [&](const auto&) { return density_real_moment(m.node(), order, force_quadrature); },
        },
        m.node());
}

bool closed_form_moments(const MeasureSpec& m) {
    return std::visit(overloaded{
                          [](const MeasureSpec::CustomDensity&) { return false; },
                          [](const MeasureSpec::Mellin& mc) {
                              return closed_form_moments(mc.left) && closed_form_moments(mc.right);
                          },
                          [](const MeasureSpec::Scaled& s) { return closed_form_moments(s.inner); },
                          [](const auto&) { return true; },
                      },
                      m.node());
}

template <class R>
R integrate_impl(const MeasureSpec& m, const std::function<R(double)>& g) {
    auto atoms_sum = [&](const std::vector<Atom>& atoms) {
        R sum{};
        for (const auto& a : atoms) sum += (a.weight / a.location) * g(a.location);
        return sum;
    };
    return std::visit(
        overloaded{
            [&](const MeasureSpec::PointMasses& p) { return atoms_sum(p.atoms); },
            [&](const MeasureSpec::AtomSeries& s) { return atoms_sum(s.head); },
            [&](const MeasureSpec::Mellin& mc) {
                std::function<R(double)> outer = [&](double x) {
                    std::function<R(double)> inner = [&](double y) { return g(x * y); };
                    return integrate_impl<R>(mc.right, inner);
                };
                return integrate_impl<R>(mc.left, outer);
            },
            [&](const MeasureSpec::Scaled& s) { return s.c * integrate_impl<R>(s.inner, g); },
            [&](const auto&) {
                const auto d = *log_density(m.node());
                auto integrand = [&](double u) -> R {
                    const double w = std::exp(d.log_phi(u));
                    if (w == 0.0 || !std::isfinite(w)) return R{};
                    return g(std::exp(u)) * w;
                };
                return quad::integrate_line(integrand, d.u_lo, d.u_hi, {.rel_tol = kQuadRelTol});
            },
        },
        m.node());
}

// Atoms of a purely atomic measure (countable tails contribute only their head).
std::optional<std::vector<Atom>> atoms_of(const MeasureSpec& m) {
    return std::visit(
        overloaded{
            [](const MeasureSpec::PointMasses& p) -> std::optional<std::vector<Atom>> {
                return p.atoms;
            },
            [](const MeasureSpec::AtomSeries& s) -> std::optional<std::vector<Atom>> {
                return s.head;
            },
            [](const MeasureSpec::Scaled& s) -> std::optional<std::vector<Atom>> {
                auto inner = atoms_of(s.inner);
                if (!inner) return std::nullopt;
                for (auto& a : *inner) a.weight *= s.c;
                return inner;
            },
            [](const MeasureSpec::Mellin& mc) -> std::optional<std::vector<Atom>> {
                auto l = atoms_of(mc.left);
                auto r = atoms_of(mc.right);
                if (!l || !r) return std::nullopt;
                std::vector<Atom> out;
                for (const auto& x : *l)
                    for (const auto& y : *r) out.push_back({x.weight * y.weight, x.location * y.location});
                std::sort(out.begin(), out.end(),
                          [](const Atom& a, const Atom& b) { return a.location < b.location; });
                std::vector<Atom> merged;
                for (const auto& a : out) {
                    if (!merged.empty() && merged.back().location == a.location) {
                        merged.back().weight += a.weight;
                    } else {
                        merged.push_back(a);
                    }
                }
                return merged;
            },
            [](const auto&) -> std::optional<std::vector<Atom>> { return std::nullopt; },
        },
        m.node());
}

double inf_support(const MeasureSpec& m) {
    return std::visit(
        overloaded{
            [](const MeasureSpec::PointMasses& p) {
                return p.atoms.empty() ? kInf : p.atoms.front().location;
            },
            [](const MeasureSpec::AtomSeries& s) {
                const double head = s.head.empty() ? kInf : s.head.front().location;
                return std::min(head, s.certificate.tail_infimum);
            },
            [](const MeasureSpec::PowerTail&) { return 1.0; },
            [](const MeasureSpec::BetaTail&) { return 1.0; },
            [](const MeasureSpec::ConstantDensity& d) { return d.lo; },
            [](const MeasureSpec::CustomDensity& d) { return d.lo; },
            [](const MeasureSpec::Mellin& mc) {
                const double l = inf_support(mc.left);
                const double r = inf_support(mc.right);
                if (std::isinf(l) || std::isinf(r)) return kInf;
                return l * r;
            },
            [](const MeasureSpec::Scaled& s) { return inf_support(s.inner); },
        },
        m.node());
}

bool has_inexact_tail(const MeasureSpec& m) {
    return std::visit(overloaded{
                          [](const MeasureSpec::AtomSeries& s) {
                              return s.certificate.tail_supremum < 1.0;
                          },
                          [](const MeasureSpec::Mellin& mc) {
                              return has_inexact_tail(mc.left) || has_inexact_tail(mc.right);
                          },
                          [](const MeasureSpec::Scaled& s) { return has_inexact_tail(s.inner); },
                          [](const auto&) { return false; },
                      },
                      m.node());
}

std::string describe_atoms(const std::vector<Atom>& atoms) {
    std::string out = "[";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ", ";
        out += "(" + format_number(atoms[i].weight) + ", " + format_number(atoms[i].location) + ")";
    }
    return out + "]";
}

}  // namespace

MeasureSpec MeasureSpec::point_masses(std::vector<Atom> atoms) {
    auto canon = canonical_atoms(std::move(atoms));
    const double mu0 = atoms_real_moment(canon, 0.0);
    return MeasureSpec(std::make_shared<const Node>(PointMasses{std::move(canon)}), mu0);
}

MeasureSpec MeasureSpec::atom_series(std::function<Atom(std::size_t)> generator,
                                     AtomTailCertificate certificate, std::string label) {
    if (!generator) throw DomainError("atom series needs a generator");
    const auto& c = certificate;
    if (!(c.tail_bound >= 0.0) || !std::isfinite(c.tail_bound)) {
        throw DomainError("tail bound must be finite and non-negative");
    }
    if (!(c.tail_infimum >= 0.0) || !(c.tail_supremum >= c.tail_infimum)) {
        throw DomainError("tail location bounds are inconsistent");
    }
    if (!(c.tail_infimum >= 1.0 || c.tail_supremum < 1.0)) {
        throw DomainError("tail atoms must lie strictly on one side of 1");
    }
    std::vector<Atom> head;
    head.reserve(c.truncation);
    for (std::size_t k = 0; k < c.truncation; ++k) head.push_back(generator(k));
    head = canonical_atoms(std::move(head));
    const double mu0 = atoms_real_moment(head, 0.0);
    return MeasureSpec(std::make_shared<const Node>(
                           AtomSeries{std::move(generator), certificate, std::move(head), std::move(label)}),
                       mu0);
}

MeasureSpec MeasureSpec::power_tail(double a) {
    if (!std::isfinite(a)) throw DomainError("power tail exponent must be finite");
    if (!(a > 0.0)) {
        throw DivergentMoment("power tail a=" + format_number(a) +
                              " has infinite weighted mass (needs a > 0)");
    }
    return MeasureSpec(std::make_shared<const Node>(PowerTail{a}), 1.0 / a);
}

MeasureSpec MeasureSpec::beta_tail(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0) || !(a + 1.0 > b)) {
        throw DomainError("beta tail needs a+1 > b > 0, got a=" + format_number(a) +
                          ", b=" + format_number(b));
    }
    return MeasureSpec(std::make_shared<const Node>(BetaTail{a, b}), beta_moment(a, b, 0));
}

MeasureSpec MeasureSpec::constant_density(double c, double lo, double hi) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("density level must be positive");
    if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("density support must satisfy 0 <= lo < hi");
    if (lo == 0.0 || hi == kInf) {
        throw DivergentMoment("constant density on (" + format_number(lo) + ", " + format_number(hi) +
                              ") has infinite weighted mass");
    }
    return MeasureSpec(std::make_shared<const Node>(ConstantDensity{c, lo, hi}),
                       c * std::log(hi / lo));
}

MeasureSpec MeasureSpec::custom_density(std::function<double(double)> phi, double lo, double hi,
                                        DensityCertificate certificate, std::string label) {
    if (!phi) throw DomainError("density needs a function");
    if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("density support must satisfy 0 <= lo < hi");
    CustomDensity d{std::move(phi), lo, hi, certificate, std::move(label)};
    check_custom_order(d, 0.0);
    auto node = std::make_shared<const Node>(std::move(d));
    const double mu0 = density_real_moment(*node, 0.0, true);
    if (!std::isfinite(mu0)) throw DivergentMoment("density has infinite weighted mass");
    return MeasureSpec(std::move(node), mu0);
}

MeasureSpec MeasureSpec::mellin(MeasureSpec left, MeasureSpec right) {
    const double mu0 = left.weighted_mass() * right.weighted_mass();
    return MeasureSpec(std::make_shared<const Node>(Mellin{std::move(left), std::move(right)}), mu0);
}

MeasureSpec MeasureSpec::scaled(double c, MeasureSpec inner) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("scale factor must be positive and finite, got " + format_number(c));
    }
    const double mu0 = c * inner.weighted_mass();
    return MeasureSpec(std::make_shared<const Node>(Scaled{c, std::move(inner)}), mu0);
}

bool MeasureSpec::is_atomic() const { return atoms_of(*this).has_value(); }

std::string MeasureSpec::describe() const {
    return std::visit(
        overloaded{
            [](const PointMasses& p) { return "point_masses" + describe_atoms(p.atoms); },
            [](const AtomSeries& s) {
                return "atom_series(" + (s.label.empty() ? std::string("generator") : s.label) +
                       ", K=" + std::to_string(s.certificate.truncation) + ")";
            },
            [](const PowerTail& d) { return "power_tail(a=" + format_number(d.a) + ")"; },
            [](const BetaTail& d) {
                return "beta_tail(a=" + format_number(d.a) + ", b=" + format_number(d.b) + ")";
            },
            [](const ConstantDensity& d) {
                return "constant(" + format_number(d.c) + " on (" + format_number(d.lo) + ", " +
                       format_number(d.hi) + "))";
            },
            [](const CustomDensity& d) {
                return "density(" + (d.label.empty() ? std::string("custom") : d.label) + ")";
            },
            [](const Mellin& mc) {
                return "mellin(" + mc.left.describe() + ", " + mc.right.describe() + ")";
            },
            [](const Scaled& s) { return format_number(s.c) + "*" + s.inner.describe(); },
        },
        node());
}

bool operator==(const MeasureSpec& x, const MeasureSpec& y) {
    if (x.node_ == y.node_) return true;
    if (x.node().index() != y.node().index()) return false;
    return std::visit(
        overloaded{
            [&](const MeasureSpec::PointMasses& p) {
                return p.atoms == std::get<MeasureSpec::PointMasses>(y.node()).atoms;
            },
            [&](const MeasureSpec::AtomSeries& s) {
                const auto& o = std::get<MeasureSpec::AtomSeries>(y.node());
                return s.label == o.label && s.head == o.head &&
                       s.certificate.tail_bound == o.certificate.tail_bound;
            },
            [&](const MeasureSpec::PowerTail& d) {
                return d.a == std::get<MeasureSpec::PowerTail>(y.node()).a;
            },
            [&](const MeasureSpec::BetaTail& d) {
                const auto& o = std::get<MeasureSpec::BetaTail>(y.node());
                return d.a == o.a && d.b == o.b;
            },
            [&](const MeasureSpec::ConstantDensity& d) {
                const auto& o = std::get<MeasureSpec::ConstantDensity>(y.node());
                return d.c == o.c && d.lo == o.lo && d.hi == o.hi;
            },
            [&](const MeasureSpec::CustomDensity&) { return false; },
            [&](const MeasureSpec::Mellin& mc) {
                const auto& o = std::get<MeasureSpec::Mellin>(y.node());
                return mc.left == o.left && mc.right == o.right;
            },
            [&](const MeasureSpec::Scaled& s) {
                const auto& o = std::get<MeasureSpec::Scaled>(y.node());
                return s.c == o.c && s.inner == o.inner;
            },
        },
        x.node());
}

double moment(const MeasureSpec& m, int n) { return moment_entry(m, n).value; }

MomentEntry moment_entry(const MeasureSpec& m, int n) {
    if (n < 0) throw DomainError("moment index must be non-negative");
    const double v = real_moment_impl(m, n, false);
    if (closed_form_moments(m)) return {v, MomentMethod::ClosedForm, 0.0};
    return {v, MomentMethod::Quadrature, kQuadRelTol * v};
}

double moment_quadrature(const MeasureSpec& m, int n) {
    if (n < 0) throw DomainError("moment index must be non-negative");
    return real_moment_impl(m, n, true);
}

double real_moment(const MeasureSpec& m, double order) { return real_moment_impl(m, order, false); }

PowerIntegral power_integral_above_one(const MeasureSpec& m, double s) {
    using S = PowerIntegral::Status;
    auto atoms_part = [&](const std::vector<Atom>& atoms) {
        double sum = 0.0;
        for (const auto& a : atoms)
            if (a.location >= 1.0) sum += a.weight * std::pow(a.location, s);
        return sum;
    };
    return std::visit(
        overloaded{
            [&](const MeasureSpec::PointMasses& p) { return PowerIntegral{S::Finite, atoms_part(p.atoms)}; },
            [&](const MeasureSpec::AtomSeries& a) {
                const auto& c = a.certificate;
                const double head = atoms_part(a.head);
                if (c.tail_supremum < 1.0) return PowerIntegral{S::Finite, head};
                // weight * t^s = (weight/t) * t^{s+1}
                if (s + 1.0 <= 0.0 || c.tail_supremum < kInf) return PowerIntegral{S::Finite, head};
                return PowerIntegral{S::Unknown, head};
            },
            [&](const MeasureSpec::PowerTail& d) {
                if (d.a - s > 1.0) return PowerIntegral{S::Finite, 1.0 / (d.a - s - 1.0)};
                return PowerIntegral{S::Divergent, kInf};
            },
            [&](const MeasureSpec::BetaTail& d) {
                if (d.a - d.b - s > 0.0) {
                    return PowerIntegral{S::Finite, std::exp(log_beta(d.b, d.a - d.b - s))};
                }
                return PowerIntegral{S::Divergent, kInf};
            },
            [&](const MeasureSpec::ConstantDensity& d) {
                const double l = std::max(d.lo, 1.0);
                if (d.hi <= l) return PowerIntegral{S::Finite, 0.0};
                const double v = s == -1.0 ? d.c * std::log(d.hi / l)
                                           : d.c * (std::pow(d.hi, s + 1.0) - std::pow(l, s + 1.0)) / (s + 1.0);
                return PowerIntegral{S::Finite, v};
            },
            [&](const MeasureSpec::CustomDensity& d) {
                if (d.hi == kInf && !(d.certificate.growth_at_infinity + s < -1.0)) {
                    return PowerIntegral{S::Unknown, 0.0};
                }
                const auto ld = *log_density(m.node());
                return PowerIntegral{S::Finite, density_real_moment_quadrature(ld, -(s + 1.0), 0.0)};
            },
            [&](const MeasureSpec::Mellin& mc) {
                if (inf_support(mc.left) < 1.0 || inf_support(mc.right) < 1.0) {
                    return PowerIntegral{S::Unknown, 0.0};
                }
                const auto l = power_integral_above_one(mc.left, s);
                const auto r = power_integral_above_one(mc.right, s);
                if (l.status == S::Finite && r.status == S::Finite) return PowerIntegral{S::Finite, l.value * r.value};
                if ((l.status == S::Divergent && r.status != S::Unknown && mc.right.weighted_mass() > 0) ||
                    (r.status == S::Divergent && l.status != S::Unknown && mc.left.weighted_mass() > 0)) {
                    return PowerIntegral{S::Divergent, kInf};
                }
                return PowerIntegral{S::Unknown, 0.0};
            },
            [&](const MeasureSpec::Scaled& sc) {
                auto inner = power_integral_above_one(sc.inner, s);
                inner.value *= sc.c;
                return inner;
            },
        },
        m.node());
}

double integrate(const MeasureSpec& m, const std::function<double(double)>& g) {
    return integrate_impl<double>(m, g);
}

std::complex<double> integrate(const MeasureSpec& m,
                               const std::function<std::complex<double>(double)>& g) {
    return integrate_impl<std::complex<double>>(m, g);
}

double mass_below(const MeasureSpec& m, double x) {
    if (!(x > 0.0)) return 0.0;
    if (inf_support(m) >= x) return 0.0;
    if (auto atoms = atoms_of(m)) {
        double sum = 0.0;
        for (const auto& a : *atoms)
            if (a.location < x) sum += a.weight;
        return sum;
    }
    return std::visit(
        overloaded{
            [&](const MeasureSpec::ConstantDensity& d) {
                return d.c * std::max(0.0, std::min(d.hi, x) - d.lo);
            },
            [&](const MeasureSpec::PowerTail& d) {
                if (d.a == 1.0) return std::log(x);
                return (std::pow(x, 1.0 - d.a) - 1.0) / (1.0 - d.a);
            },
            [&](const MeasureSpec::Mellin& mc) {
                if (auto la = atoms_of(mc.left)) {
                    double sum = 0.0;
                    for (const auto& a : *la) sum += a.weight * mass_below(mc.right, x / a.location);
                    return sum;
                }
                if (auto ra = atoms_of(mc.right)) {
                    double sum = 0.0;
                    for (const auto& a : *ra) sum += a.weight * mass_below(mc.left, x / a.location);
                    return sum;
                }
                std::function<double(double)> g = [&](double y) { return y * mass_below(mc.left, x / y); };
                return integrate(mc.right, g);
            },
            [&](const MeasureSpec::Scaled& s) { return s.c * mass_below(s.inner, x); },
            [&](const auto&) {
                // phi(t) dt = exp(log_phi(u) + u) du
                const auto d = *log_density(m.node());
                return density_real_moment_quadrature(d, -1.0, -kInf, std::log(x));
            },
        },
        m.node());
}

double mass_at(const MeasureSpec& m, double x) {
    auto atoms = atoms_of(m);
    if (!atoms) {
        // A convolution with a diffuse factor, or a density: no atoms.
        return 0.0;
    }
    for (const auto& a : *atoms) {
        if (std::abs(a.location - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x) return a.weight;
    }
    return 0.0;
}

SupportReport support_report(const MeasureSpec& m) {
    SupportReport r;
    r.inf_support = inf_support(m);
    r.total_weighted_mass = m.weighted_mass();
    r.mass_below_1 = r.inf_support >= 1.0 ? 0.0 : mass_below(m, 1.0);
    r.mass_at_1 = r.inf_support > 1.0 ? 0.0 : mass_at(m, 1.0);
    r.mass_unit_interval = r.mass_below_1 + r.mass_at_1;
    r.masses_exact = !has_inexact_tail(m);
    return r;
}

double beta_moment(double a, double b, int n) {
    if (n < 0) throw DomainError("moment index must be non-negative");
    const double second = n + a - b + 1.0;
    if (!(b > 0.0) || !(a + 1.0 > b) || !(second > 0.0)) {
        throw DomainError("beta moment needs a+1 > b > 0 and n+a-b+1 > 0, got a=" + format_number(a) +
                          ", b=" + format_number(b) + ", n=" + std::to_string(n));
    }
    return std::exp(log_beta(b, second));
}

MeasureSpec normalize(const MeasureSpec& m) {
    const double mu0 = m.weighted_mass();
    if (!(mu0 > 0.0)) throw ZeroMeasure("cannot normalize a measure with mu_0 = 0");
    return MeasureSpec::scaled(1.0 / mu0, m);
}

MomentSequence::MomentSequence(MeasureSpec m) : measure_(std::move(m)) {}

MomentEntry MomentSequence::entry(int n) const {
    if (n < 0) throw DomainError("moment index must be non-negative");
    std::lock_guard lock(mutex_);
    while (static_cast<int>(cache_.size()) <= n) {
        cache_.push_back(moment_entry(measure_, static_cast<int>(cache_.size())));
    }
    return cache_[n];
}

std::vector<double> MomentSequence::values(int count) const {
    std::vector<double> out;
    out.reserve(count);
    if (count > 0) entry(count - 1);
    std::lock_guard lock(mutex_);
    for (int n = 0; n < count; ++n) out.push_back(cache_[n].value);
    return out;
}

int MomentSequence::computed() const {
    std::lock_guard lock(mutex_);
    return static_cast<int>(cache_.size());
}

}  // namespace fockhaus
