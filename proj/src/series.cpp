#include "fockhaus/series.hpp"

#include "fockhaus/error.hpp"

#include <algorithm>
#include <cmath>

namespace fockhaus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void merge_upper(DecayTag& tag, PowerBound b) {
    if (!tag.upper || b.exponent > tag.upper->exponent ||
        (b.exponent == tag.upper->exponent && b.constant < tag.upper->constant)) {
        tag.upper = b;
    }
}

void merge_lower(DecayTag& tag, PowerBound b) {
    if (!tag.lower || b.exponent < tag.lower->exponent ||
        (b.exponent == tag.lower->exponent && b.constant > tag.lower->constant)) {
        tag.lower = b;
    }
}

void add_provenance(DecayTag& tag, const std::string& s) {
    if (!tag.provenance.empty()) tag.provenance += "; ";
    tag.provenance += s;
}

// B(b, n+a-b+1) (n+1)^b stays between two positive constants.
std::pair<PowerBound, PowerBound> beta_power_bounds(double a, double b) {
    constexpr int kExact = 64;
    double hi = 0.0, lo = kInf;
    for (int n = 0; n < kExact; ++n) {
        const double v = beta_moment(a, b, n) * std::pow(n + 1.0, b);
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    // For n >= kExact, with x = n+a-b+1: b psi(x) <= log Gamma(x+b) - log Gamma(x) <= b psi(x+b)
    // and log y - 1/y <= psi(y) <= log y - 1/(2y).
    const double gb = std::tgamma(b);
    const double n1 = kExact + 1.0;
    const double x_min = n1 + a - b;
    const double up_ratio = std::max(1.0, n1 / x_min);
    const double low_ratio = std::min(1.0, n1 / (n1 + a));
    hi = std::max(hi, gb * std::pow(up_ratio, b) * std::exp(b / x_min));
    lo = std::min(lo, gb * std::pow(low_ratio, b));
    return {{b, hi * (1.0 + 1e-12)}, {b, lo * (1.0 - 1e-12)}};
}

DecayTag structural_tag(const MeasureSpec& m) {
    DecayTag tag;
    std::visit(overloaded{
                   [&](const MeasureSpec::PowerTail& d) {
                       tag.upper = PowerBound{1.0, std::max(1.0, 1.0 / d.a)};
                       tag.lower = PowerBound{1.0, std::min(1.0, 1.0 / d.a)};
                       add_provenance(tag, "closed form 1/(n+a), a=" + format_number(d.a));
                   },
                   [&](const MeasureSpec::BetaTail& d) {
                       auto [up, low] = beta_power_bounds(d.a, d.b);
                       tag.upper = up;
                       tag.lower = low;
                       add_provenance(tag, "closed form B(b, n+a-b+1) ~ Gamma(b) (n+1)^{-b}, b=" +
                                               format_number(d.b));
                   },
                   [&](const MeasureSpec::ConstantDensity& d) {
                       if (d.lo != 1.0) return;
                       const double mu0 = d.c * std::log(d.hi);
                       tag.upper = PowerBound{1.0, std::max(mu0, 2.0 * d.c)};
                       tag.lower = PowerBound{1.0, std::min(mu0, d.c * (1.0 - 1.0 / d.hi))};
                       add_provenance(tag, "closed form c(1 - hi^{-n})/n");
                   },
                   [&](const MeasureSpec::Mellin& mc) {
                       const auto l = decay_tag(mc.left);
                       const auto r = decay_tag(mc.right);
                       if (l.upper && r.upper) {
                           tag.upper = PowerBound{l.upper->exponent + r.upper->exponent,
                                                  l.upper->constant * r.upper->constant};
                       }
                       if (l.lower && r.lower) {
                           tag.lower = PowerBound{l.lower->exponent + r.lower->exponent,
                                                  l.lower->constant * r.lower->constant};
                       }
                       if (tag.upper || tag.lower) add_provenance(tag, "product of factor bounds");
                   },
                   [&](const MeasureSpec::Scaled& s) {
                       tag = decay_tag(s.inner);
                       tag.provenance.clear();
                       if (tag.upper) tag.upper->constant *= s.c;
                       if (tag.lower) tag.lower->constant *= s.c;
                       tag.geometric_constant *= s.c;
                       if (tag.upper || tag.lower) add_provenance(tag, "scaled factor bounds");
                   },
                   [](const auto&) {},
               },
               m.node());
    return tag;
}

double log_term_bound(double logC, double log_ratio, double P, double W, double n) {
    return P * logC + P * n * log_ratio + W * std::log(n + 1.0);
}

}  // namespace

DecayTag decay_tag(const MeasureSpec& m) {
    DecayTag tag = structural_tag(m);
    const auto s = support_report(m);
    if (s.mass_below_1 > 0.0) {
        tag.upper.reset();
        tag.geometric_ratio.reset();
        tag.grows = true;
        add_provenance(tag, "mu(0,1) = " + format_number(s.mass_below_1) + " > 0");
        return tag;
    }
    if (std::isinf(s.inf_support) || m.weighted_mass() == 0.0) {
        tag.geometric_ratio = 0.0;
        tag.geometric_constant = 0.0;
        add_provenance(tag, "zero measure");
        return tag;
    }
    if (s.inf_support > 1.0 && !tag.geometric_ratio) {
        tag.geometric_ratio = 1.0 / s.inf_support;
        tag.geometric_constant = m.weighted_mass();
        add_provenance(tag, "mu_n <= mu_0 inf_support^{-n}, inf_support = " + format_number(s.inf_support));
    }
    if (s.inf_support >= 1.0) merge_upper(tag, {0.0, m.weighted_mass()});
    if (s.mass_at_1 > 0.0) {
        merge_lower(tag, {0.0, s.mass_at_1});
        add_provenance(tag, "mu_n >= mu({1}) = " + format_number(s.mass_at_1));
    }
    return tag;
}

MomentTerm MomentTerm::from_measure(const MeasureSpec& m) {
    return from_moments(std::make_shared<const MomentSequence>(m));
}

MomentTerm MomentTerm::from_moments(std::shared_ptr<const MomentSequence> moments) {
    MomentTerm t;
    t.decay = decay_tag(moments->measure());
    t.label = "mu_n of " + moments->measure().describe();
    t.value = [moments](int n) { return (*moments)[n]; };
    return t;
}

MomentTerm MomentTerm::geometric(double constant, double ratio) {
    if (!(constant >= 0.0) || !(ratio >= 0.0)) throw DomainError("geometric sequence needs non-negative data");
    MomentTerm t;
    t.value = [constant, ratio](int n) { return constant * std::pow(ratio, n); };
    t.label = format_number(constant) + " * " + format_number(ratio) + "^n";
    if (ratio < 1.0) {
        t.decay.geometric_ratio = ratio;
        t.decay.geometric_constant = constant;
    } else if (ratio == 1.0) {
        t.decay.upper = PowerBound{0.0, constant};
        t.decay.lower = PowerBound{0.0, constant};
    } else if (constant > 0.0) {
        t.decay.grows = true;
    }
    t.decay.provenance = "closed form " + t.label;
    return t;
}

MomentTerm MomentTerm::power(double constant, double exponent) {
    if (!(constant >= 0.0)) throw DomainError("power sequence needs a non-negative constant");
    MomentTerm t;
    t.value = [constant, exponent](int n) { return constant * std::pow(n + 1.0, -exponent); };
    t.label = format_number(constant) + " * (n+1)^-" + format_number(exponent);
    t.decay.upper = PowerBound{exponent, constant};
    t.decay.lower = PowerBound{exponent, constant};
    t.decay.provenance = "closed form " + t.label;
    return t;
}

std::string series_id(SeriesKind kind, double power, double weight) {
    std::string s = kind == SeriesKind::Sum ? "sum" : "sup";
    s += " mu_n";
    if (power != 1.0) s += "^" + format_number(power);
    if (weight != 0.0) s += " (n+1)^" + format_number(weight);
    return s;
}

std::string to_string(SeriesOutcome o) {
    switch (o) {
        case SeriesOutcome::Converges: return "Converges";
        case SeriesOutcome::Diverges: return "Diverges";
        case SeriesOutcome::Unknown: return "Unknown";
    }
    return "Unknown";
}

SeriesVerdict series_verdict(const MomentTerm& term, double weight, double power, int N, SeriesKind kind) {
    if (!(power > 0.0)) throw DomainError("series power must be positive");
    if (N < 1) throw DomainError("series needs at least one term");
    const double P = power, W = weight;
    const bool sum = kind == SeriesKind::Sum;

    SeriesVerdict v;
    v.series_id = series_id(kind, P, W);
    v.kind = kind;
    v.power = P;
    v.weight = W;

    double acc = 0.0;
    int n = 0;
    for (; n < N; ++n) {
        const double mu = term.value(n);
        const double t = mu == 0.0 ? 0.0 : std::exp(P * std::log(mu) + W * std::log(n + 1.0));
        if (!std::isfinite(t)) {
            acc = kInf;
            ++n;
            break;
        }
        acc = sum ? acc + t : std::max(acc, t);
    }
    v.terms = n;
    v.partial = acc;

    const auto& d = term.decay;
    if (d.grows) {
        v.outcome = SeriesOutcome::Diverges;
        v.witness = "mu(0,1) > 0 forces geometric growth of mu_n";
        return v;
    }
    if (d.geometric_ratio) {
        const double rho = *d.geometric_ratio;
        const double C = d.geometric_constant;
        v.outcome = SeriesOutcome::Converges;
        v.witness = "mu_n <= " + format_number(C) + " * " + format_number(rho) + "^n";
        if (rho == 0.0 || C == 0.0) {
            v.tail_bound = 0.0;
            return v;
        }
        const double lC = std::log(C), lr = std::log(rho);
        const double Nd = static_cast<double>(N);
        if (!sum) {
            double at = Nd;
            if (W > 0.0) at = std::max(Nd, W / (-P * lr) - 1.0);
            const double b = std::max(std::exp(log_term_bound(lC, lr, P, W, std::floor(at))),
                                      std::exp(log_term_bound(lC, lr, P, W, std::ceil(at))));
            v.tail_bound = b;
            return v;
        }
        auto ratio_after = [&](double M) {
            return W > 0.0 ? std::exp(P * lr + W * std::log((M + 2.0) / (M + 1.0))) : std::exp(P * lr);
        };
        double M = Nd;
        double explicit_part = 0.0;
        while (ratio_after(M) >= 1.0 && M < 1e8) M *= 2.0;
        if (ratio_after(M) >= 1.0) {
            v.outcome = SeriesOutcome::Unknown;
            v.witness = "geometric ratio too close to 1 to certify a tail";
            return v;
        }
        for (double k = Nd; k < M; k += 1.0) explicit_part += std::exp(log_term_bound(lC, lr, P, W, k));
        v.tail_bound = explicit_part + std::exp(log_term_bound(lC, lr, P, W, M)) / (1.0 - ratio_after(M));
        return v;
    }
    if (d.upper) {
        const double e = W - d.upper->exponent * P;
        const double CP = std::pow(d.upper->constant, P);
        if (sum && e < -1.0) {
            v.outcome = SeriesOutcome::Converges;
            v.tail_bound = CP * std::pow(static_cast<double>(N), e + 1.0) / (-(e + 1.0));
            v.witness = "terms <= " + format_number(CP) + " (n+1)^" + format_number(e) + ", exponent < -1";
            return v;
        }
        if (!sum && e <= 0.0) {
            v.outcome = SeriesOutcome::Converges;
            v.tail_bound = CP * std::pow(N + 1.0, e);
            v.witness = "terms <= " + format_number(CP) + " (n+1)^" + format_number(e) + ", exponent <= 0";
            return v;
        }
    }
    if (d.lower) {
        const double e = W - d.lower->exponent * P;
        const double cP = std::pow(d.lower->constant, P);
        if (cP > 0.0 && ((sum && e >= -1.0) || (!sum && e > 0.0))) {
            v.outcome = SeriesOutcome::Diverges;
            v.witness = "terms >= " + format_number(cP) + " (n+1)^" + format_number(e) +
                        (sum ? ", exponent >= -1" : ", exponent > 0");
            return v;
        }
    }
    v.outcome = SeriesOutcome::Unknown;
    v.witness = "no certified decay rate decides this series";
    return v;
}

}  // namespace fockhaus
