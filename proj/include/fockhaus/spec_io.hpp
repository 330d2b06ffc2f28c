#pragma once

#include "fockhaus/classify.hpp"
#include "fockhaus/entire.hpp"
#include "fockhaus/measure.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace fockhaus {

using json = nlohmann::ordered_json;

/// Named measures: "hardy", "beta:a:b", "dirac:t" (the atom (t, t), so mu_0 = 1)
/// and "geom:lambda:ratio" (atoms lambda ratio^k at 1 + 1/k, k >= 1).
MeasureSpec builtin_measure(std::string_view name);
bool is_builtin_measure_name(std::string_view name);

/// Accepts a JSON object or a string holding a built-in name. Unknown fields
/// are rejected with SpecError.
MeasureSpec measure_from_json(const json& j);
json measure_to_json(const MeasureSpec& m);

/// A built-in name, inline JSON text, or a path to a JSON file.
MeasureSpec load_measure(const std::string& source);

/// "monomial:n", "kernel:beta:re:im", "peak:n", inline {"coeffs": ...} JSON or
/// a path to such a file. Kernels are truncated for the disk that matters at
/// alpha and p_min.
CoeffFunction parse_function(const std::string& descriptor, double alpha = 1.0, double p_min = 1.0);
json function_to_json(const CoeffFunction& f);

/// Numbers are rounded to 12 significant digits; non-finite values become
/// the strings "inf", "-inf" or "nan".
json number_json(double x);
double json_number(const json& j);

json to_json(const SeriesVerdict& v);
json to_json(const ClassReport& r);
json to_json(const SupportReport& s);

RadialWeight parse_weight(const std::string& descriptor);

}  // namespace fockhaus
