#include "fockhaus/spec_io.hpp"

#include "fockhaus/error.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace fockhaus {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// Decimal, "a/b", or inf.
double parse_real(const std::string& text, const std::string& what) {
    if (text == "inf" || text == "infinity" || text == "Inf") return kInf;
    if (text == "-inf") return -kInf;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        return parse_real(text.substr(0, slash), what) / parse_real(text.substr(slash + 1), what);
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw SpecError("cannot parse " + what + " from '" + text + "'");
    return v;
}

int parse_int(const std::string& text, const std::string& what) {
    const double v = parse_real(text, what);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e6) {
        throw SpecError(what + " must be a non-negative integer, got '" + text + "'");
    }
    return static_cast<int>(v);
}

void require_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : j.items()) {
        if (!ok.count(key)) throw SpecError("unknown field '" + key + "' in " + where);
    }
    for (const auto* key : allowed) {
        if (!j.contains(key)) throw SpecError("missing field '" + std::string(key) + "' in " + where);
    }
}

double field(const json& j, const char* key) {
    try {
        return json_number(j.at(key));
    } catch (const SpecError& e) {
        throw SpecError(std::string("field '") + key + "': " + e.what());
    }
}

// Exact decimal for serialization; measure specs must round-trip bit for bit.
json exact_number(double x) {
    if (std::isfinite(x)) return x;
    return number_json(x);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError("invalid JSON in " + origin + ": " + e.what());
    }
}

MeasureSpec geometric_atoms(double lambda, double ratio) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw SpecError("geom weight must be positive and finite");
    if (!(ratio > 0.0 && ratio < 1.0)) throw SpecError("geom ratio must lie in (0, 1)");
    // Tail sum over k > K of lambda ratio^k / t_k is at most lambda ratio^{K+1} / (1 - ratio).
    const double target = 1e-16 * (1.0 - ratio);
    std::size_t K = 1;
    double r_pow = ratio * ratio;  // ratio^{K+1}
    while (r_pow > target) {
        if (++K > 1000000) throw SpecError("geom ratio too close to 1 for a 10^6-term head");
        r_pow *= ratio;
    }
    AtomTailCertificate cert;
    cert.truncation = K;
    cert.tail_bound = lambda * r_pow / (1.0 - ratio);
    cert.tail_infimum = 1.0;
    cert.tail_supremum = 1.0 + 1.0 / static_cast<double>(K + 1);
    auto gen = [lambda, ratio](std::size_t i) {
        const double k = static_cast<double>(i + 1);
        return Atom{lambda * std::pow(ratio, k), 1.0 + 1.0 / k};
    };
    return MeasureSpec::atom_series(gen, cert, "geom:" + format_number(lambda) + ":" + format_number(ratio));
}

}  // namespace

json number_json(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return std::stod(format_number(x));
}

double json_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        if (s == "nan") return std::nan("");
    }
    throw SpecError("expected a number, got " + j.dump());
}

bool is_builtin_measure_name(std::string_view name) {
    const auto head = split(name, ':').front();
    return head == "hardy" || head == "beta" || head == "dirac" || head == "geom";
}

MeasureSpec builtin_measure(std::string_view name) {
    const auto parts = split(name, ':');
    const auto& kind = parts.front();
    auto arity = [&](std::size_t n, const char* usage) {
        if (parts.size() != n + 1) throw SpecError("built-in measure usage: " + std::string(usage));
    };
    try {
        if (kind == "hardy") {
            arity(0, "hardy");
            return MeasureSpec::power_tail(1.0);
        }
        if (kind == "beta") {
            arity(2, "beta:a:b");
            return MeasureSpec::beta_tail(parse_real(parts[1], "a"), parse_real(parts[2], "b"));
        }
        if (kind == "dirac") {
            arity(1, "dirac:t");
            const double t = parse_real(parts[1], "t");
            return MeasureSpec::point_masses({{t, t}});
        }
        if (kind == "geom") {
            arity(2, "geom:lambda:ratio");
            return geometric_atoms(parse_real(parts[1], "lambda"), parse_real(parts[2], "ratio"));
        }
    } catch (const DomainError& e) {
        throw SpecError("built-in measure '" + std::string(name) + "': " + e.what());
    }
    throw SpecError("unknown built-in measure '" + std::string(name) + "'");
}

MeasureSpec measure_from_json(const json& j) {
    if (j.is_string()) return builtin_measure(j.get<std::string>());
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw SpecError("measure spec must be an object with a string 'type' or a built-in name");
    }
    const auto type = j["type"].get<std::string>();
    if (type == "point_masses") {
        require_fields(j, {"type", "atoms"}, "point_masses");
        if (!j["atoms"].is_array()) throw SpecError("'atoms' must be an array of [weight, location]");
        std::vector<Atom> atoms;
        for (const auto& a : j["atoms"]) {
            if (!a.is_array() || a.size() != 2) throw SpecError("each atom must be [weight, location]");
            atoms.push_back({json_number(a[0]), json_number(a[1])});
        }
        return MeasureSpec::point_masses(std::move(atoms));
    }
    if (type == "density") {
        if (!j.contains("kind") || !j["kind"].is_string()) throw SpecError("density needs a string 'kind'");
        const auto kind = j["kind"].get<std::string>();
        if (kind == "power_tail") {
            require_fields(j, {"type", "kind", "a"}, "power_tail density");
            return MeasureSpec::power_tail(field(j, "a"));
        }
        if (kind == "beta_tail") {
            require_fields(j, {"type", "kind", "a", "b"}, "beta_tail density");
            return MeasureSpec::beta_tail(field(j, "a"), field(j, "b"));
        }
        if (kind == "constant") {
            require_fields(j, {"type", "kind", "c", "lo", "hi"}, "constant density");
            return MeasureSpec::constant_density(field(j, "c"), field(j, "lo"), field(j, "hi"));
        }
        throw SpecError("unknown density kind '" + kind + "'");
    }
    if (type == "mellin") {
        require_fields(j, {"type", "left", "right"}, "mellin");
        return MeasureSpec::mellin(measure_from_json(j["left"]), measure_from_json(j["right"]));
    }
    if (type == "scaled") {
        require_fields(j, {"type", "c", "inner"}, "scaled");
        return MeasureSpec::scaled(field(j, "c"), measure_from_json(j["inner"]));
    }
    throw SpecError("unknown measure type '" + type + "'");
}

json measure_to_json(const MeasureSpec& m) {
    return std::visit(
        [&](const auto& node) -> json {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, MeasureSpec::PointMasses>) {
                json atoms = json::array();
                for (const auto& a : node.atoms) atoms.push_back({exact_number(a.weight), exact_number(a.location)});
                return {{"type", "point_masses"}, {"atoms", atoms}};
            } else if constexpr (std::is_same_v<T, MeasureSpec::AtomSeries>) {
                if (node.label.rfind("geom:", 0) != 0) {
                    throw SpecError("atom series '" + node.label + "' has no JSON form");
                }
                return node.label;
            } else if constexpr (std::is_same_v<T, MeasureSpec::PowerTail>) {
                return {{"type", "density"}, {"kind", "power_tail"}, {"a", exact_number(node.a)}};
            } else if constexpr (std::is_same_v<T, MeasureSpec::BetaTail>) {
                return {{"type", "density"}, {"kind", "beta_tail"}, {"a", exact_number(node.a)},
                        {"b", exact_number(node.b)}};
            } else if constexpr (std::is_same_v<T, MeasureSpec::ConstantDensity>) {
                return {{"type", "density"}, {"kind", "constant"}, {"c", exact_number(node.c)},
                        {"lo", exact_number(node.lo)}, {"hi", exact_number(node.hi)}};
            } else if constexpr (std::is_same_v<T, MeasureSpec::CustomDensity>) {
                throw SpecError("custom density '" + node.label + "' has no JSON form");
            } else if constexpr (std::is_same_v<T, MeasureSpec::Mellin>) {
                return {{"type", "mellin"}, {"left", measure_to_json(node.left)},
                        {"right", measure_to_json(node.right)}};
            } else {
                return {{"type", "scaled"}, {"c", exact_number(node.c)}, {"inner", measure_to_json(node.inner)}};
            }
        },
        m.node());
}

MeasureSpec load_measure(const std::string& source) {
    if (source.empty()) throw SpecError("empty measure argument");
    try {
        if (is_builtin_measure_name(source)) return builtin_measure(source);
        if (source.front() == '{' || source.front() == '"') {
            return measure_from_json(parse_json_text(source, "inline measure"));
        }
        return measure_from_json(parse_json_text(read_file(source), "'" + source + "'"));
    } catch (const json::exception& e) {
        throw SpecError(std::string("malformed measure spec: ") + e.what());
    }
}

CoeffFunction parse_function(const std::string& descriptor, double alpha, double p_min) {
    if (descriptor.empty()) throw SpecError("empty function descriptor");
    const auto parts = split(descriptor, ':');
    const auto& kind = parts.front();
    try {
        if (kind == "monomial") {
            if (parts.size() != 2) throw SpecError("usage: monomial:n");
            return monomial(parse_int(parts[1], "monomial index"));
        }
        if (kind == "kernel") {
            if (parts.size() != 4) throw SpecError("usage: kernel:beta:re:im");
            const double beta = parse_real(parts[1], "beta");
            const cplx a{parse_real(parts[2], "Re a"), parse_real(parts[3], "Im a")};
            return kernel(beta, a, kernel_disk_radius(beta, a, alpha, p_min));
        }
        if (kind == "peak") {
            if (parts.size() != 2) throw SpecError("usage: peak:n");
            return gaussian_peak(parse_int(parts[1], "peak index"), alpha);
        }
    } catch (const DomainError& e) {
        throw SpecError("function '" + descriptor + "': " + e.what());
    }
    const json j = descriptor.front() == '{' ? parse_json_text(descriptor, "inline function")
                                             : parse_json_text(read_file(descriptor), "'" + descriptor + "'");
    if (!j.is_object()) throw SpecError("function spec must be an object with 'coeffs'");
    require_fields(j, {"coeffs"}, "function spec");
    if (!j["coeffs"].is_array() || j["coeffs"].empty()) throw SpecError("'coeffs' must be a non-empty array");
    std::vector<cplx> c;
    for (const auto& x : j["coeffs"]) {
        if (x.is_array() && x.size() == 2) {
            c.emplace_back(json_number(x[0]), json_number(x[1]));
        } else if (x.is_number()) {
            c.emplace_back(x.get<double>(), 0.0);
        } else {
            throw SpecError("each coefficient must be [re, im] or a real number");
        }
        if (!std::isfinite(c.back().real()) || !std::isfinite(c.back().imag())) {
            throw SpecError("coefficients must be finite");
        }
    }
    return CoeffFunction(std::move(c));
}

json function_to_json(const CoeffFunction& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back({number_json(c.real()), number_json(c.imag())});
    return {{"coeffs", coeffs}};
}

json to_json(const SeriesVerdict& v) {
    json j{{"series", v.series_id},
           {"kind", v.kind == SeriesKind::Sum ? "sum" : "sup"},
           {"power", number_json(v.power)},
           {"weight", number_json(v.weight)},
           {"terms", v.terms},
           {"partial", number_json(v.partial)},
           {"tail_bound", v.tail_bound ? number_json(*v.tail_bound) : json(nullptr)},
           {"outcome", to_string(v.outcome)},
           {"witness", v.witness}};
    return j;
}

json to_json(const ClassReport& r) {
    json evidence = json::array();
    for (const auto& e : r.evidence) {
        evidence.push_back({{"criterion", e.criterion},
                            {"quantity", e.quantity},
                            {"value", number_json(e.value)},
                            {"threshold", e.threshold}});
    }
    json series = json::array();
    for (const auto& s : r.series) series.push_back(to_json(s));
    json j{{"criterion", r.criterion}, {"verdict", to_string(r.verdict)}, {"evidence", evidence}};
    j["question"] = to_string(r.question);
    j["statement"] = r.statement;
    if (r.p) j["p"] = r.p->is_infinite() ? json("inf") : number_json(r.p->value());
    if (r.q) j["q"] = r.q->is_infinite() ? json("inf") : number_json(r.q->value());
    if (r.alpha) j["alpha"] = number_json(*r.alpha);
    j["series"] = series;
    j["notices"] = r.notices;
    return j;
}

json to_json(const SupportReport& s) {
    return {{"inf_support", number_json(s.inf_support)},
            {"mass_below_1", number_json(s.mass_below_1)},
            {"mass_at_1", number_json(s.mass_at_1)},
            {"mass_unit_interval", number_json(s.mass_unit_interval)},
            {"total_weighted_mass", number_json(s.total_weighted_mass)},
            {"masses_exact", s.masses_exact}};
}

RadialWeight parse_weight(const std::string& descriptor) {
    const auto parts = split(descriptor, ':');
    if (parts.front() == "gauss" && parts.size() == 2) {
        const double alpha = parse_real(parts[1], "weight alpha");
        if (!(alpha > 0.0)) throw SpecError("gauss weight needs alpha > 0");
        return RadialWeight::gaussian(alpha);
    }
    throw SpecError("unknown weight '" + descriptor + "' (expected gauss:alpha)");
}

}  // namespace fockhaus
