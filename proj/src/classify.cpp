#include "fockhaus/classify.hpp"

#include "fockhaus/error.hpp"

#include <algorithm>
#include <cmath>

namespace fockhaus {

namespace {

struct Condition {
    SeriesKind kind;
    double power;
    double weight;
};

Condition sum_of(double power, double weight) { return {SeriesKind::Sum, power, weight}; }
Condition sup_of(double power, double weight) { return {SeriesKind::Supremum, power, weight}; }

struct CriterionPlan {
    Question question = Question::Smoothing;
    std::string statement;
    std::vector<Condition> sufficient;
    std::vector<Condition> necessary;
    bool iff = false;
    /// Additional sufficient hypothesis int_{[1,inf)} t^s dmu < inf.
    std::optional<double> integral_exponent;
    std::vector<std::string> notes;
};

std::string space(const char* name, Exponent p) { return std::string(name) + "^" + p.to_string(); }

[[noreturn]] void inapplicable(const std::string& id, const std::string& range, Exponent p, Exponent q) {
    throw CriterionInapplicable(id + " needs " + range + ", got p=" + p.to_string() + ", q=" + q.to_string());
}

bool is(Exponent e, double v) { return e.value() == v; }

double conjugate(Exponent p) {
    if (is(p, 1.0)) return kInf;
    if (p.is_infinite()) return 1.0;
    return p.value() / (p.value() - 1.0);
}

CriterionPlan smoothing_plan(const std::string& id, Exponent p, Exponent q) {
    const double pv = p.value(), qv = q.value();
    const double ip = p.reciprocal(), iq = q.reciprocal();
    CriterionPlan plan;
    plan.question = Question::Smoothing;
    plan.statement = "H_mu: " + space("F", q) + " -> " + space("F", p);
    if (id == "smoothing.coefficient-sum") {
        if (!(pv >= 1.0 && p < q)) inapplicable(id, "1 <= p < q <= inf", p, q);
        const double w = 0.5 * (ip - iq);
        plan.sufficient = {sum_of(1.0, w)};
        plan.necessary = {sup_of(1.0, w)};
    } else if (id == "smoothing.f2-holder") {
        if (!(is(q, 2.0) && pv < 2.0)) inapplicable(id, "q = 2 and 0 < p < 2", p, q);
        const double g = std::min(pv, 1.0);
        plan.sufficient = {sum_of(2.0 * g / (2.0 - g), g * (2.0 - pv) / (2.0 * pv * (2.0 - g)))};
        plan.necessary = {sup_of(1.0, (2.0 - pv) / (4.0 * pv))};
    } else if (id == "smoothing.finf-to-f1") {
        if (!(is(p, 1.0) && q.is_infinite())) inapplicable(id, "p = 1 and q = inf", p, q);
        plan.sufficient = {sum_of(1.0, 0.0)};
        plan.necessary = {sum_of(1.0, -0.5)};
    } else if (id == "smoothing.dilation-integral") {
        if (!(pv >= 1.0 && pv <= 2.0 && qv >= 2.0 && p < q)) inapplicable(id, "1 <= p <= 2 <= q <= inf, p < q", p, q);
        plan.integral_exponent = 2.0 * iq - 1.0;
        const double w = q.is_infinite() ? ip - 1.0 : (qv - pv) / (pv * qv) - 1.0;
        const double u = q.is_infinite() ? pv : pv * qv / (qv - pv);
        plan.sufficient = {sum_of(1.0, w)};
        plan.necessary = {sum_of(u, -0.5)};
        plan.notes.push_back("the sufficient side requires both the integral and the series");
    } else if (id == "smoothing.finf-to-fp") {
        if (!(q.is_infinite() && pv >= 1.0 && pv <= 2.0)) inapplicable(id, "q = inf and 1 <= p <= 2", p, q);
        plan.sufficient = {sum_of(1.0, ip - 1.0)};
        plan.necessary = {sum_of(pv, -0.5)};
    } else if (id == "smoothing.f2-to-fp") {
        if (!(is(q, 2.0) && pv < 2.0)) inapplicable(id, "q = 2 and 0 < p < 2", p, q);
        const double u = 2.0 * pv / (2.0 - pv);
        plan.sufficient = {sum_of(u, 0.5)};
        plan.necessary = {sum_of(u, 0.0)};
    } else if (id == "smoothing.f2-to-f1-chain") {
        const bool a = is(p, 1.0) && is(q, 2.0);
        const bool b = is(p, 2.0) && q.is_infinite();
        if (!(a || b)) inapplicable(id, "(p, q) = (1, 2) or (2, inf)", p, q);
        plan.statement = "H_mu: F^2 -> F^{2,1} <=> F^2 -> F^1 <=> F^inf -> F^2";
        plan.sufficient = {sum_of(2.0, 0.5)};
        plan.necessary = {sum_of(2.0, 0.0)};
    } else if (id == "mixed.f1-to-finf1") {
        if (!is(q, 1.0)) inapplicable(id, "source index q = 1", p, q);
        plan.question = Question::MixedBounded;
        plan.statement = "H_mu: F^1 -> F^{inf,1}";
        plan.iff = true;
        plan.sufficient = {sup_of(1.0, 0.5)};
    } else if (id == "mixed.fq-to-f2q") {
        if (!(qv < 2.0)) inapplicable(id, "0 < q < 2", p, q);
        plan.question = Question::MixedBounded;
        plan.statement = "H_mu: " + space("F", q) + " -> F^{2," + q.to_string() + "}";
        plan.sufficient = {sup_of(1.0, (2.0 - qv) / (2.0 * qv))};
        plan.necessary = {sup_of(1.0, (2.0 - qv) / (4.0 * qv))};
    } else {
        throw CriterionInapplicable("unknown smoothing criterion '" + id + "'");
    }
    return plan;
}

CriterionPlan summing_plan(const std::string& id, Exponent p, Exponent q) {
    const double pv = p.value(), qv = q.value();
    CriterionPlan plan;
    plan.question = Question::Summing;
    if (id == "summing.absolutely-summing-finf-f1") {
        plan.statement = "H_mu: f^inf -> F^1 absolutely summing";
        plan.iff = true;
        plan.sufficient = {sum_of(1.0, 0.0)};
    } else if (id == "summing.nuclear-chain") {
        plan.statement = "H_mu on f^inf: nuclear (sufficient) / absolutely summing (necessary)";
        plan.sufficient = {sum_of(1.0, 0.0)};
        plan.necessary = {sum_of(1.0, -0.5)};
    } else if (id == "summing.nuclear") {
        if (!(qv >= 1.0)) inapplicable(id, "1 <= q <= inf", p, q);
        plan.statement = "H_mu on " + space("F", q) + " nuclear";
        plan.sufficient = {sum_of(1.0, 0.0)};
    } else if (id == "summing.p-nuclear-small") {
        if (!(pv > 1.0 && p <= q && qv <= 2.0)) inapplicable(id, "1 < p <= q <= 2", p, q);
        plan.statement = "H_mu on " + space("F", q) + " " + p.to_string() + "-nuclear";
        plan.sufficient = {sum_of(pv, 0.0)};
    } else if (id == "summing.p-nuclear-large") {
        if (!(pv >= 1.0 && !p.is_infinite() && std::max(pv, 2.0) <= qv)) inapplicable(id, "1 <= p, max(p, 2) <= q", p, q);
        plan.statement = "H_mu on " + space("F", q) + " " + p.to_string() + "-nuclear";
        plan.sufficient = {sum_of(pv, pv * (0.5 - q.reciprocal()))};
    } else if (id == "summing.p-summing-dual") {
        if (!(pv >= 1.0 && pv <= 2.0)) inapplicable(id, "1 <= p <= 2", p, q);
        plan.statement = "H_mu on " + space("F", Exponent(conjugate(p))) + " " + p.to_string() + "-summing";
        plan.sufficient = {sum_of(pv, (2.0 - pv) / 2.0)};
        plan.necessary = {sum_of(pv, (pv - 2.0) / 2.0)};
    } else if (id == "summing.dual-summing-lp") {
        if (!(pv >= 1.0 && pv <= 2.0)) inapplicable(id, "1 <= p <= 2", p, q);
        const double pc = conjugate(p);
        plan.statement = "H_mu on " + space("F", p) + " " + format_number(pc) + "-summing";
        plan.necessary = {std::isinf(pc) ? sup_of(1.0, 0.0) : sum_of(pc, 0.0)};
    } else if (id == "summing.qp-summing") {
        if (!(pv > 1.0 && !q.is_infinite() && conjugate(p) <= qv)) inapplicable(id, "1 < p <= inf, p' <= q < inf", p, q);
        plan.statement = "H_mu on " + space("F", p) + " (" + q.to_string() + "," + format_number(conjugate(p)) +
                         ")-summing";
        plan.necessary = {sum_of(qv, qv * (1.0 / std::max(pv, 2.0) - 0.5))};
    } else if (id == "summing.finf-inclusion-small") {
        if (!(pv >= 1.0 && pv <= 2.0)) inapplicable(id, "1 <= p <= 2", p, q);
        plan.statement = "H_mu: F^inf -> " + space("F", p);
        plan.necessary = {sum_of(2.0, 1.0 / pv - 0.5)};
        plan.notes.push_back("conditional: the series is a consequence of the inclusion, which is itself only "
                             "partially characterized");
    } else if (id == "summing.finf-inclusion-large") {
        if (!(qv > 2.0 && !q.is_infinite())) inapplicable(id, "2 < q < inf", p, q);
        plan.statement = "H_mu: F^inf -> " + space("F", q);
        plan.necessary = {sum_of(qv, 0.5 * (1.0 - qv / 2.0))};
        plan.notes.push_back("conditional: the series is a consequence of the inclusion, which is itself only "
                             "partially characterized");
    } else {
        throw CriterionInapplicable("unknown summing criterion '" + id + "'");
    }
    return plan;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        case Verdict::SufficientHolds: return "SufficientHolds";
        case Verdict::NecessaryFails: return "NecessaryFails";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string to_string(Question q) {
    switch (q) {
        case Question::EntireContinuity: return "EntireContinuity";
        case Question::EntireCompact: return "EntireCompact";
        case Question::FockBounded: return "FockBounded";
        case Question::MixedBounded: return "MixedBounded";
        case Question::Compact: return "Compact";
        case Question::WeightedBounded: return "WeightedBounded";
        case Question::WeightedCompact: return "WeightedCompact";
        case Question::Smoothing: return "Smoothing";
        case Question::Summing: return "Summing";
    }
    return "";
}

RadialWeight RadialWeight::gaussian(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("gaussian weight needs alpha > 0");
    RadialWeight v;
    v.name = "gauss:" + format_number(alpha);
    v.profile = [alpha](double r) { return std::exp(-alpha * r * r / 2.0); };
    v.monomial_growth = true;
    v.dilation_decay = true;
    return v;
}

const std::vector<std::string>& smoothing_criterion_ids() {
    static const std::vector<std::string> ids = {
        "smoothing.coefficient-sum", "smoothing.f2-holder",      "smoothing.finf-to-f1",
        "smoothing.dilation-integral", "smoothing.finf-to-fp",   "smoothing.f2-to-fp",
        "smoothing.f2-to-f1-chain",  "mixed.f1-to-finf1",        "mixed.fq-to-f2q",
    };
    return ids;
}

const std::vector<std::string>& summing_criterion_ids() {
    static const std::vector<std::string> ids = {
        "summing.absolutely-summing-finf-f1", "summing.nuclear-chain",  "summing.nuclear",
        "summing.p-nuclear-small",           "summing.p-nuclear-large", "summing.p-summing-dual",
        "summing.dual-summing-lp",           "summing.qp-summing",      "summing.finf-inclusion-small",
        "summing.finf-inclusion-large",
    };
    return ids;
}

Classifier::Classifier(MeasureSpec m, int series_terms)
    : original_(m), normalized_(m), series_terms_(series_terms) {
    const double mu0 = m.weighted_mass();
    if (mu0 == 0.0) {
        zero_ = true;
        notices_.push_back("zero measure: H_mu = 0");
    } else if (mu0 != 1.0) {
        normalized_ = normalize(m);
        notices_.push_back("normalized: mu_0 = " + format_number(mu0) + " rescaled to 1");
    }
    support_ = support_report(normalized_);
    term_ = MomentTerm::from_measure(normalized_);
}

ClassReport Classifier::base_report(Question q, std::string criterion, std::string statement) const {
    ClassReport r;
    r.question = q;
    r.criterion = std::move(criterion);
    r.statement = std::move(statement);
    r.notices = notices_;
    return r;
}

EntireReport Classifier::entire() const {
    EntireReport out;
    const double inf = support_.inf_support;
    auto& c = out.continuity;
    c = base_report(Question::EntireContinuity, "support.entire-continuity", "H_mu: H(C) -> H(C) continuous");
    c.evidence.push_back({c.criterion, "inf_support", inf, "> 0"});
    if (inf > 0.0 && std::isfinite(inf)) {
        c.evidence.push_back({c.criterion, "bound on sup_n mu_n^{1/n}",
                              std::max(original_.weighted_mass(), 1.0) / inf, "< inf"});
    }
    c.verdict = inf > 0.0 ? Verdict::Yes : Verdict::No;

    auto& k = out.compactness;
    k = base_report(Question::EntireCompact, "support.entire-noncompact", "H_mu: H(C) -> H(C) compact");
    if (zero_) {
        k.verdict = Verdict::Yes;
    } else {
        k.verdict = Verdict::No;
        k.evidence.push_back({k.criterion, "mu_0", original_.weighted_mass(), "never compact when mu != 0"});
        if (!(inf > 0.0)) k.notices.push_back("operator is not defined on H(C)");
    }
    return out;
}

ClassReport Classifier::bounded(Exponent p, Exponent q, double alpha) const {
    auto r = base_report(Question::FockBounded, "support.mass-below-one",
                         "H_mu: " + space("F", p) + " -> " + space("F", q));
    r.p = p;
    r.q = q;
    r.alpha = alpha;
    r.evidence.push_back({r.criterion, "mu(0,1)", support_.mass_below_1, "= 0"});
    if (zero_) {
        r.verdict = Verdict::Yes;
        return r;
    }
    if (p <= q) {
        r.verdict = support_.mass_below_1 == 0.0 ? Verdict::Yes : Verdict::No;
        return r;
    }
    // Into a smaller space: boundedness forces mu(0,1) = 0, beyond that only
    // the series criteria speak.
    if (support_.mass_below_1 > 0.0) {
        r.verdict = Verdict::No;
        return r;
    }
    r.criterion = "smoothing.aggregate";
    bool sufficient = false, necessary_fails = false;
    for (const auto& c : smoothing(q, p, alpha)) {
        if (c.question != Question::Smoothing) continue;
        r.evidence.push_back({c.criterion, "verdict " + to_string(c.verdict), 0.0, c.statement});
        sufficient = sufficient || c.verdict == Verdict::SufficientHolds;
        necessary_fails = necessary_fails || c.verdict == Verdict::NecessaryFails;
    }
    r.verdict = sufficient ? Verdict::SufficientHolds
                           : (necessary_fails ? Verdict::NecessaryFails : Verdict::Inconclusive);
    return r;
}

ClassReport Classifier::mixed_bounded(Exponent p, Exponent q, double alpha) const {
    auto r = base_report(Question::MixedBounded, "support.mass-below-one",
                         "H_mu on F^{" + p.to_string() + "," + q.to_string() + "}");
    r.p = p;
    r.q = q;
    r.alpha = alpha;
    r.evidence.push_back({r.criterion, "mu(0,1)", support_.mass_below_1, "= 0"});
    r.verdict = zero_ || support_.mass_below_1 == 0.0 ? Verdict::Yes : Verdict::No;
    return r;
}

ClassReport Classifier::compact(Exponent p, Exponent q, double alpha) const {
    auto r = base_report(Question::Compact, "support.mass-unit-interval",
                         "H_mu: " + space("F", p) + " -> " + space("F", q) + " compact");
    r.p = p;
    r.q = q;
    r.alpha = alpha;
    r.evidence.push_back({r.criterion, "mu((0,1])", support_.mass_unit_interval, "= 0"});
    r.evidence.push_back({r.criterion, "mu({1})", support_.mass_at_1, "= 0"});
    if (zero_) {
        r.verdict = Verdict::Yes;
    } else if (support_.mass_unit_interval > 0.0) {
        r.verdict = Verdict::No;
    } else if (p <= q) {
        r.verdict = Verdict::Yes;
    } else {
        r.verdict = Verdict::Inconclusive;
        r.notices.push_back("mu((0,1]) = 0 gives compactness on every F^p; into a smaller space it "
                            "additionally needs boundedness, which only the series criteria address");
    }
    return r;
}

ClassReport Classifier::weighted(const RadialWeight& v, WeightedQuestion question) const {
    if (question == WeightedQuestion::Bounded) {
        auto r = base_report(Question::WeightedBounded, "support.weighted-bounded", "H_mu on H^inf_v, v = " + v.name);
        r.evidence.push_back({r.criterion, "mu(0,1)", support_.mass_below_1, "= 0"});
        r.evidence.push_back({r.criterion, "int_1^inf dmu/t", original_.weighted_mass(), "< inf"});
        r.verdict = zero_ || support_.mass_below_1 == 0.0 ? Verdict::Yes : Verdict::No;
        return r;
    }
    if (!v.monomial_growth || !v.dilation_decay) {
        throw HypothesisNotDeclared("weight '" + v.name +
                                    "' must declare lim ||u_n||_v^{1/n} = inf and lim v(tr)/v(r) = 0");
    }
    auto r = base_report(Question::WeightedCompact, "support.weighted-compact",
                         "H_mu on H^inf_v compact, v = " + v.name);
    r.evidence.push_back({r.criterion, "mu(0,1)", support_.mass_below_1, "= 0"});
    r.evidence.push_back({r.criterion, "mu({1})", support_.mass_at_1, "= 0"});
    if (zero_) {
        r.verdict = Verdict::Yes;
    } else if (support_.mass_below_1 > 0.0) {
        r.verdict = Verdict::No;
        r.notices.push_back("not bounded on H^inf_v");
    } else if (!*v.monomial_growth || !*v.dilation_decay) {
        r.verdict = Verdict::Inconclusive;
        r.notices.push_back("weight hypotheses declared false; the atom-at-1 criterion does not apply");
    } else {
        r.verdict = support_.mass_at_1 == 0.0 ? Verdict::Yes : Verdict::No;
    }
    return r;
}

namespace {

ClassReport evaluate_plan(ClassReport r, const CriterionPlan& plan, const MomentTerm& term,
                          const MeasureSpec& m, int N) {
    r.question = plan.question;
    r.statement = plan.statement;
    for (const auto& n : plan.notes) r.notices.push_back(n);

    std::vector<SeriesOutcome> suff, nec;
    for (const auto& c : plan.sufficient) {
        auto v = series_verdict(term, c.weight, c.power, N, c.kind);
        r.evidence.push_back({r.criterion, v.series_id + (plan.iff ? " [iff]" : " [sufficient]"), v.partial,
                              "< inf: " + to_string(v.outcome)});
        suff.push_back(v.outcome);
        r.series.push_back(std::move(v));
    }
    std::optional<PowerIntegral> integral;
    if (plan.integral_exponent) {
        integral = power_integral_above_one(m, *plan.integral_exponent);
        const char* st = integral->status == PowerIntegral::Status::Finite      ? "Finite"
                         : integral->status == PowerIntegral::Status::Divergent ? "Divergent"
                                                                                 : "Unknown";
        r.evidence.push_back({r.criterion, "int_1^inf t^" + format_number(*plan.integral_exponent) + " dmu",
                              integral->value, std::string("< inf: ") + st});
    }
    for (const auto& c : plan.necessary) {
        auto v = series_verdict(term, c.weight, c.power, N, c.kind);
        r.evidence.push_back({r.criterion, v.series_id + " [necessary]", v.partial, "< inf: " + to_string(v.outcome)});
        nec.push_back(v.outcome);
        r.series.push_back(std::move(v));
    }

    if (plan.iff) {
        r.verdict = suff.front() == SeriesOutcome::Converges  ? Verdict::Yes
                    : suff.front() == SeriesOutcome::Diverges ? Verdict::No
                                                              : Verdict::Inconclusive;
        return r;
    }
    const bool series_ok = !suff.empty() && std::all_of(suff.begin(), suff.end(), [](SeriesOutcome o) {
        return o == SeriesOutcome::Converges;
    });
    const bool integral_ok = !integral || integral->status == PowerIntegral::Status::Finite;
    const bool nec_fails = std::any_of(nec.begin(), nec.end(), [](SeriesOutcome o) { return o == SeriesOutcome::Diverges; });
    if (series_ok && integral_ok) {
        r.verdict = Verdict::SufficientHolds;
    } else if (nec_fails) {
        r.verdict = Verdict::NecessaryFails;
    } else {
        r.verdict = Verdict::Inconclusive;
        if (integral && series_ok != integral_ok) {
            r.notices.push_back(std::string("partial: only the ") + (series_ok ? "series" : "integral") +
                                " hypothesis is certified");
        }
    }
    return r;
}

}  // namespace

ClassReport Classifier::smoothing(const std::string& id, Exponent p, Exponent q, double alpha) const {
    const auto plan = smoothing_plan(id, p, q);
    auto r = base_report(plan.question, id, plan.statement);
    r.p = p;
    r.q = q;
    r.alpha = alpha;
    return evaluate_plan(std::move(r), plan, term_, normalized_, series_terms_);
}

std::vector<ClassReport> Classifier::smoothing(Exponent p, Exponent q, double alpha) const {
    std::vector<ClassReport> out;
    for (const auto& id : smoothing_criterion_ids()) {
        try {
            out.push_back(smoothing(id, p, q, alpha));
        } catch (const CriterionInapplicable&) {
        }
    }
    return out;
}

ClassReport Classifier::summing(const std::string& id, Exponent p, Exponent q) const {
    const auto plan = summing_plan(id, p, q);
    auto r = base_report(plan.question, id, plan.statement);
    r.p = p;
    r.q = q;
    return evaluate_plan(std::move(r), plan, term_, normalized_, series_terms_);
}

std::vector<ClassReport> Classifier::summing(Exponent p, Exponent q) const {
    std::vector<ClassReport> out;
    for (const auto& id : summing_criterion_ids()) {
        try {
            out.push_back(summing(id, p, q));
        } catch (const CriterionInapplicable&) {
        }
    }
    return out;
}

EntireReport classify_entire(const MeasureSpec& m) { return Classifier(m).entire(); }

ClassReport classify_bounded(const MeasureSpec& m, Exponent p, Exponent q, double alpha) {
    return Classifier(m).bounded(p, q, alpha);
}

ClassReport classify_mixed_bounded(const MeasureSpec& m, Exponent p, Exponent q, double alpha) {
    return Classifier(m).mixed_bounded(p, q, alpha);
}

ClassReport classify_compact(const MeasureSpec& m, Exponent p, Exponent q, double alpha) {
    return Classifier(m).compact(p, q, alpha);
}

ClassReport classify_weighted(const MeasureSpec& m, const RadialWeight& v, WeightedQuestion question) {
    return Classifier(m).weighted(v, question);
}

std::vector<ClassReport> smoothing_criteria(const MeasureSpec& m, Exponent p, Exponent q, double alpha) {
    return Classifier(m).smoothing(p, q, alpha);
}

std::vector<ClassReport> summing_criteria(const MeasureSpec& m, Exponent p, Exponent q) {
    return Classifier(m).summing(p, q);
}

}  // namespace fockhaus
