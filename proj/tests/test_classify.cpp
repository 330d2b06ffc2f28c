#include "fockhaus/classify.hpp"
#include "fockhaus/error.hpp"
#include "fockhaus/harness.hpp"

#include <doctest.h>

using namespace fockhaus;

namespace {

const std::vector<Exponent>& grid() {
    static const std::vector<Exponent> g = {Exponent(0.5), Exponent(1.0), Exponent(1.5), Exponent(2.0),
                                            Exponent(4.0), Exponent::infinity()};
    return g;
}

MeasureSpec hardy() { return MeasureSpec::power_tail(1.0); }
MeasureSpec dirac(double t) { return MeasureSpec::point_masses({{t, t}}); }

bool label_has(const Evidence& e, const std::string& tag) { return e.quantity.find(tag) != std::string::npos; }

}  // namespace

TEST_CASE("entire-function space") {
    auto e = classify_entire(MeasureSpec::constant_density(1.0, 0.5, 1.0));
    CHECK(e.continuity.verdict == Verdict::Yes);
    CHECK(e.compactness.verdict == Verdict::No);
    e = classify_entire(hardy());
    CHECK(e.continuity.verdict == Verdict::Yes);
    CHECK(e.compactness.verdict == Verdict::No);
    const auto atoms = MeasureSpec::atom_series(
        [](std::size_t k) { return Atom{std::pow(2.0, -double(k + 1)), 1.0 / double(k + 1)}; },
        {.truncation = 40, .tail_bound = 1e-10, .tail_infimum = 0.0, .tail_supremum = 1.0 / 41.0});
    CHECK(classify_entire(atoms).continuity.verdict == Verdict::No);
}

TEST_CASE("boundedness and compactness on the basic examples") {
    for (const auto& p : grid())
        for (const auto& q : grid()) {
            if (q < p) continue;
            for (double alpha : {0.5, 1.0, 2.0}) {
                CHECK(classify_bounded(hardy(), p, q, alpha).verdict == Verdict::Yes);
                CHECK(classify_compact(hardy(), p, q, alpha).verdict == Verdict::Yes);
                CHECK(classify_bounded(dirac(1.0), p, q, alpha).verdict == Verdict::Yes);
                CHECK(classify_compact(dirac(1.0), p, q, alpha).verdict == Verdict::No);
                CHECK(classify_bounded(MeasureSpec::constant_density(1.0, 0.5, 1.0), p, q, alpha).verdict == Verdict::No);
                CHECK(classify_mixed_bounded(dirac(2.0), p, q, alpha).verdict == Verdict::Yes);
            }
        }
}

TEST_CASE("into a smaller space compactness is not decided by the support alone") {
    const auto r = classify_compact(hardy(), Exponent(2.0), Exponent(1.0), 1.0);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(!r.notices.empty());
}

TEST_CASE("weighted sup spaces") {
    const auto v = RadialWeight::gaussian(1.0);
    CHECK(classify_weighted(hardy(), v, WeightedQuestion::Bounded).verdict == Verdict::Yes);
    CHECK(classify_weighted(hardy(), v, WeightedQuestion::Compact).verdict == Verdict::Yes);
    CHECK(classify_weighted(dirac(1.0), v, WeightedQuestion::Compact).verdict == Verdict::No);
    CHECK(classify_weighted(MeasureSpec::point_masses({{0.5, 0.5}}), v, WeightedQuestion::Bounded).verdict == Verdict::No);

    RadialWeight bare{"bare", [](double r) { return std::exp(-r); }, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(classify_weighted(hardy(), bare, WeightedQuestion::Compact), HypothesisNotDeclared);
    bare.monomial_growth = false;
    bare.dilation_decay = true;
    CHECK(classify_weighted(hardy(), bare, WeightedQuestion::Compact).verdict == Verdict::Inconclusive);
}

TEST_CASE("smoothing criteria") {
    const Classifier h(hardy());
    // sum (n+1)^{-1} diverges but the necessary sum (n+1)^{-3/2} converges.
    CHECK(h.smoothing("smoothing.finf-to-f1", Exponent(1.0), Exponent::infinity(), 1.0).verdict == Verdict::Inconclusive);
    const Classifier sq(MeasureSpec::mellin(hardy(), hardy()));
    CHECK(sq.smoothing("smoothing.finf-to-f1", Exponent(1.0), Exponent::infinity(), 1.0).verdict ==
          Verdict::SufficientHolds);
    const Classifier d2(dirac(2.0));
    for (const auto& r : d2.smoothing(Exponent(1.0), Exponent::infinity(), 1.0))
        if (r.question == Question::Smoothing) CHECK(r.verdict == Verdict::SufficientHolds);
    CHECK_THROWS_AS(h.smoothing("smoothing.dilation-integral", Exponent(3.0), Exponent(4.0), 1.0), CriterionInapplicable);
    CHECK_THROWS_AS(h.smoothing("smoothing.no-such", Exponent(1.0), Exponent(2.0), 1.0), CriterionInapplicable);
    // Geometric moments satisfy the f2-to-fp necessary sum but a single atom at 1 fails it.
    const Classifier d1(dirac(1.0));
    CHECK(d1.smoothing("smoothing.f2-to-fp", Exponent(1.0), Exponent(2.0), 1.0).verdict == Verdict::NecessaryFails);
}

TEST_CASE("summing criteria") {
    CHECK(Classifier(hardy()).summing("summing.absolutely-summing-finf-f1", Exponent(1.0), Exponent(1.0)).verdict ==
          Verdict::No);
    CHECK(Classifier(MeasureSpec::mellin(hardy(), hardy()))
              .summing("summing.absolutely-summing-finf-f1", Exponent(1.0), Exponent(1.0))
              .verdict == Verdict::Yes);
    for (const auto& r : Classifier(dirac(2.0)).summing(Exponent(1.5), Exponent(1.5)))
        for (const auto& s : r.series) CHECK(s.outcome == SeriesOutcome::Converges);
}

TEST_CASE("scale is normalized away and recorded") {
    const Classifier a(hardy());
    const Classifier b(MeasureSpec::scaled(3.0, hardy()));
    REQUIRE(!b.notices().empty());
    CHECK(b.notices().front().find("normalized") != std::string::npos);
    CHECK(a.bounded(Exponent(1.0), Exponent(2.0), 1.0).verdict == b.bounded(Exponent(1.0), Exponent(2.0), 1.0).verdict);
    CHECK(a.smoothing("smoothing.finf-to-f1", Exponent(1.0), Exponent::infinity(), 1.0).verdict ==
          b.smoothing("smoothing.finf-to-f1", Exponent(1.0), Exponent::infinity(), 1.0).verdict);
    const Classifier z(MeasureSpec::point_masses({}));
    CHECK(z.bounded(Exponent(1.0), Exponent(1.0), 1.0).verdict == Verdict::Yes);
    CHECK(z.compact(Exponent(1.0), Exponent(1.0), 1.0).verdict == Verdict::Yes);
}

TEST_CASE("property: compact implies bounded, and verdicts ignore (p, q, alpha) for p <= q") {
    for (const auto& [name, m] : measure_corpus()) {
        CAPTURE(name);
        const Classifier c(m);
        const auto b0 = c.bounded(Exponent(1.0), Exponent(1.0), 1.0).verdict;
        const auto k0 = c.compact(Exponent(1.0), Exponent(1.0), 1.0).verdict;
        for (const auto& p : grid())
            for (const auto& q : grid()) {
                if (q < p) continue;
                for (double alpha : {0.5, 1.0, 3.0}) {
                    const auto b = c.bounded(p, q, alpha).verdict;
                    const auto k = c.compact(p, q, alpha).verdict;
                    CHECK(b == b0);
                    CHECK(k == k0);
                    if (k == Verdict::Yes) CHECK(b == Verdict::Yes);
                }
            }
    }
}

TEST_CASE("property: smoothing sufficiency implies compactness on the source space") {
    for (const auto& [name, m] : measure_corpus()) {
        CAPTURE(name);
        const Classifier c(m);
        for (const auto& p : grid())
            for (const auto& q : grid()) {
                if (!(p < q)) continue;
                for (const auto& r : c.smoothing(p, q, 1.0)) {
                    if (r.question != Question::Smoothing || r.verdict != Verdict::SufficientHolds) continue;
                    CAPTURE(r.criterion);
                    CHECK(c.compact(q, q, 1.0).verdict == Verdict::Yes);
                }
            }
    }
}

TEST_CASE("property: certified sufficient conditions never coexist with a failed necessary one") {
    for (const auto& [name, m] : measure_corpus()) {
        CAPTURE(name);
        const Classifier c(m);
        std::vector<ClassReport> reports;
        for (const auto& p : grid())
            for (const auto& q : grid()) {
                if (p < q) {
                    const auto s = c.smoothing(p, q, 1.0);
                    reports.insert(reports.end(), s.begin(), s.end());
                }
                const auto s = c.summing(p, q);
                reports.insert(reports.end(), s.begin(), s.end());
            }
        for (const auto& r : reports) {
            CAPTURE(r.criterion);
            CAPTURE(r.statement);
            bool all_sufficient = true, any_sufficient = false, necessary_fails = false;
            for (const auto& e : r.evidence) {
                if (label_has(e, "[sufficient]")) {
                    any_sufficient = true;
                    all_sufficient = all_sufficient && e.threshold.find("Converges") != std::string::npos;
                }
                if (label_has(e, "[necessary]") && e.threshold.find("Diverges") != std::string::npos) necessary_fails = true;
            }
            CHECK(!(any_sufficient && all_sufficient && necessary_fails));
            CHECK(!(r.verdict == Verdict::SufficientHolds && necessary_fails));
        }
    }
}

TEST_CASE("criterion id lists match what the classifier reports") {
    const Classifier c(hardy());
    for (const auto& r : c.smoothing(Exponent(1.0), Exponent::infinity(), 1.0)) {
        const auto& ids = smoothing_criterion_ids();
        CHECK(std::find(ids.begin(), ids.end(), r.criterion) != ids.end());
    }
    for (const auto& r : c.summing(Exponent(2.0), Exponent(2.0))) {
        const auto& ids = summing_criterion_ids();
        CHECK(std::find(ids.begin(), ids.end(), r.criterion) != ids.end());
    }
}

TEST_CASE("beta tail a = 2, b = 2 certifies the F^inf -> F^1 sufficient condition") {
    const Classifier c(MeasureSpec::beta_tail(2.0, 2.0));
    CHECK(c.smoothing("smoothing.finf-to-f1", Exponent(1.0), Exponent::infinity(), 1.0).verdict ==
          Verdict::SufficientHolds);
}

TEST_CASE("atoms with one location at 1 are bounded, not compact, and do not smooth") {
    const auto m = MeasureSpec::point_masses({{0.5, 1.0}, {0.5, 2.0}});
    CHECK(classify_bounded(m, Exponent(2.0), Exponent(2.0), 1.0).verdict == Verdict::Yes);
    CHECK(classify_compact(m, Exponent(2.0), Exponent(2.0), 1.0).verdict == Verdict::No);
    for (const auto& r : smoothing_criteria(m, Exponent(1.0), Exponent::infinity(), 1.0))
        if (r.question == Question::Smoothing) CHECK(r.verdict != Verdict::SufficientHolds);
}
