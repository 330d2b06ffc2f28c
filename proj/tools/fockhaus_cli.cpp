// Command-line front end: moments, operator application, norms, classification
// and the verification suite.

#include "fockhaus/classify.hpp"
#include "fockhaus/error.hpp"
#include "fockhaus/focknorm.hpp"
#include "fockhaus/harness.hpp"
#include "fockhaus/hausdorff.hpp"
#include "fockhaus/spec_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

using namespace fockhaus;

namespace {

struct Options {
    std::string measure;
    std::string fn;
    std::string p = "2";
    std::string q;
    std::string alpha = "1";
    std::string weight;
    std::string mode = "spectral";
    std::string format = "plain";
    std::string suite = "all";
    std::vector<std::string> at;
    int n = 10;
    std::uint64_t seed = 42;
    int series_terms = kDefaultSeriesTerms;
};

double parse_alpha(const std::string& text) {
    const Exponent a = Exponent::parse(text);
    if (a.is_infinite()) throw SpecError("alpha must be finite");
    return a.value();
}

Exponent q_or_p(const Options& o) { return Exponent::parse(o.q.empty() ? o.p : o.q); }

cplx parse_point(const std::string& text) {
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        const double re = std::stod(text.substr(0, colon), &used);
        double im = 0.0;
        if (colon != std::string::npos) im = std::stod(text.substr(colon + 1));
        return {re, im};
    } catch (const std::exception&) {
        throw SpecError("sample point must be re or re:im, got '" + text + "'");
    }
}

json complex_json(cplx z) { return json::array({number_json(z.real()), number_json(z.imag())}); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_moments(const Options& o) {
    if (o.n < 0) throw SpecError("--n must be non-negative");
    const MomentSequence seq(load_measure(o.measure));
    const auto values = seq.values(o.n + 1);
    if (o.format == "json") {
        json arr = json::array();
        for (double v : values) arr.push_back(number_json(v));
        print_json(arr);
    } else if (o.format == "csv") {
        std::cout << "n,moment\n";
        for (std::size_t k = 0; k < values.size(); ++k) std::cout << k << "," << format_number(values[k]) << "\n";
    } else {
        for (std::size_t k = 0; k < values.size(); ++k) std::cout << (k ? ", " : "") << format_number(values[k]);
        std::cout << "\n";
    }
    return 0;
}

int run_apply(const Options& o) {
    const double alpha = parse_alpha(o.alpha);
    const HausdorffOperator op(load_measure(o.measure));
    const auto f = parse_function(o.fn, alpha);
    std::vector<cplx> zs;
    for (const auto& s : o.at) zs.push_back(parse_point(s));
    json out;
    out["mode"] = o.mode;
    if (o.mode == "spectral") {
        const auto g = apply_spectral(op, f);
        out["coeffs"] = function_to_json(g)["coeffs"];
        if (!zs.empty()) {
            json vals = json::array();
            for (cplx z : zs) vals.push_back(complex_json(g(z)));
            out["values"] = vals;
        }
    } else if (o.mode == "quadrature") {
        if (zs.empty()) throw SpecError("quadrature mode needs sample points (--at re:im)");
        json vals = json::array();
        for (cplx v : apply_quadrature(op, f, zs)) vals.push_back(complex_json(v));
        out["values"] = vals;
    } else {
        throw SpecError("--mode must be spectral or quadrature");
    }
    if (!zs.empty()) {
        json pts = json::array();
        for (cplx z : zs) pts.push_back(complex_json(z));
        out["at"] = pts;
    }
    print_json(out);
    return 0;
}

int run_norm(const Options& o) {
    const double alpha = parse_alpha(o.alpha);
    const Exponent p = Exponent::parse(o.p), q = q_or_p(o);
    const auto f = parse_function(o.fn, alpha, std::min(p.value(), q.value()));
    std::cout << format_number(mixed_norm(f, {p, q, alpha})) << "\n";
    return 0;
}

json classify_all(const Classifier& c, Exponent p, Exponent q, double alpha, const std::string& weight) {
    json arr = json::array();
    const auto e = c.entire();
    arr.push_back(to_json(e.continuity));
    arr.push_back(to_json(e.compactness));
    arr.push_back(to_json(c.bounded(p, q, alpha)));
    arr.push_back(to_json(c.mixed_bounded(p, q, alpha)));
    arr.push_back(to_json(c.compact(p, q, alpha)));
    if (!weight.empty()) {
        const auto v = parse_weight(weight);
        arr.push_back(to_json(c.weighted(v, WeightedQuestion::Bounded)));
        arr.push_back(to_json(c.weighted(v, WeightedQuestion::Compact)));
    }
    return arr;
}

int run_classify(const Options& o) {
    const Classifier c(load_measure(o.measure), o.series_terms);
    print_json(classify_all(c, Exponent::parse(o.p), q_or_p(o), parse_alpha(o.alpha), o.weight));
    return 0;
}

int run_report(const Options& o) {
    const auto m = load_measure(o.measure);
    const Classifier c(m, o.series_terms);
    const double alpha = parse_alpha(o.alpha);
    const Exponent p = Exponent::parse(o.p), q = q_or_p(o);
    json out;
    try {
        out["measure"] = measure_to_json(m);
    } catch (const SpecError&) {
        out["measure"] = nullptr;
    }
    out["description"] = m.describe();
    out["support"] = to_json(c.support());
    json moments = json::array();
    for (int n = 0; n <= o.n; ++n) moments.push_back(number_json(c.moments().value(n)));
    out["moments"] = moments;
    out["decay"] = c.moments().decay.provenance;
    out["classification"] = classify_all(c, p, q, alpha, o.weight.empty() ? "gauss:" + o.alpha : o.weight);

    const std::vector<Exponent> grid = {Exponent(0.5), Exponent(1.0), Exponent(1.5), Exponent(2.0), Exponent(4.0),
                                        Exponent::infinity()};
    json smoothing = json::array();
    json summing = json::array();
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            for (const auto& r : c.smoothing(a, b, alpha)) {
                if (r.question == Question::Smoothing && !(a < b)) continue;
                smoothing.push_back(to_json(r));
            }
            for (const auto& r : c.summing(a, b)) summing.push_back(to_json(r));
        }
    }
    out["smoothing"] = smoothing;
    out["summing"] = summing;
    out["notices"] = c.notices();
    print_json(out);
    return 0;
}

int run_verify(const Options& o) {
    const auto results = run_suite(o.suite, o.seed);
    std::cout << csv_header() << "\n";
    for (const auto& r : results) std::cout << to_csv_row(r) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hausdorff operators on Fock spaces: moments, norms, classification, verification"};
    app.require_subcommand(1);
    Options o;

    auto* moments = app.add_subcommand("moments", "Print mu_0..mu_n");
    moments->add_option("--measure", o.measure, "Built-in name, JSON text or JSON file")->required();
    moments->add_option("--n", o.n, "Largest moment index")->capture_default_str();
    moments->add_option("--format", o.format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();

    auto* apply = app.add_subcommand("apply", "Apply H_mu to a function");
    apply->add_option("--measure", o.measure)->required();
    apply->add_option("--fn", o.fn, "monomial:n, kernel:beta:re:im, peak:n or coefficient JSON")->required();
    apply->add_option("--mode", o.mode, "spectral or quadrature")
        ->check(CLI::IsMember({"spectral", "quadrature"}))
        ->capture_default_str();
    apply->add_option("--at", o.at, "Sample point re or re:im (repeatable)");
    apply->add_option("--alpha", o.alpha)->capture_default_str();

    auto* norm = app.add_subcommand("norm", "Mixed Fock norm ||f||_{p,q,alpha}");
    norm->add_option("--fn", o.fn)->required();
    norm->add_option("--p", o.p)->capture_default_str();
    norm->add_option("--q", o.q, "Outer index (defaults to p)");
    norm->add_option("--alpha", o.alpha)->capture_default_str();

    auto* classify = app.add_subcommand("classify", "Boundedness and compactness verdicts");
    classify->add_option("--measure", o.measure)->required();
    classify->add_option("--p", o.p)->capture_default_str();
    classify->add_option("--q", o.q);
    classify->add_option("--alpha", o.alpha)->capture_default_str();
    classify->add_option("--weight", o.weight, "gauss:alpha");
    classify->add_option("--terms", o.series_terms, "Partial-sum length")->capture_default_str();

    auto* report = app.add_subcommand("report", "Full dossier for one measure");
    report->add_option("--measure", o.measure)->required();
    report->add_option("--p", o.p)->capture_default_str();
    report->add_option("--q", o.q);
    report->add_option("--alpha", o.alpha)->capture_default_str();
    report->add_option("--weight", o.weight);
    report->add_option("--n", o.n, "Moments listed")->capture_default_str();
    report->add_option("--terms", o.series_terms)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Property suites as CSV");
    verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
    verify->add_option("--seed", o.seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*moments) return run_moments(o);
        if (*apply) return run_apply(o);
        if (*norm) return run_norm(o);
        if (*classify) return run_classify(o);
        if (*report) return run_report(o);
        if (*verify) return run_verify(o);
    } catch (const SpecError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const MathError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
