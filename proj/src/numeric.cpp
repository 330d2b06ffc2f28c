#include "fockhaus/numeric.hpp"

#include "fockhaus/error.hpp"

#include <charconv>
#include <cstdio>

namespace fockhaus {

Exponent::Exponent(double value) : value_(value) {
    if (!(value > 0.0)) {
        throw DomainError("exponent must lie in (0, inf], got " + std::to_string(value));
    }
}

Exponent Exponent::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "oo") {
        return infinity();
    }
    // Accept simple fractions such as "1/2".
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        double num = 0, den = 0;
        auto head = text.substr(0, slash);
        auto tail = text.substr(slash + 1);
        auto r1 = std::from_chars(head.data(), head.data() + head.size(), num);
        auto r2 = std::from_chars(tail.data(), tail.data() + tail.size(), den);
        if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != head.data() + head.size() ||
            r2.ptr != tail.data() + tail.size() || den == 0.0) {
            throw SpecError("cannot parse exponent '" + std::string(text) + "'");
        }
        return Exponent(num / den);
    }
    double v = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
        throw SpecError("cannot parse exponent '" + std::string(text) + "'");
    }
    return Exponent(v);
}

std::string Exponent::to_string() const {
    return format_number(value_);
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

double log_gamma(double x) { return std::lgamma(x); }

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

double log_add(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

void LogSum::add(double log_term) {
    if (log_term == -kInf) return;
    if (log_term <= max_) {
        scaled_ += std::exp(log_term - max_);
    } else {
        scaled_ = scaled_ * std::exp(max_ - log_term) + 1.0;
        max_ = log_term;
    }
}

double LogSum::log_value() const {
    if (empty()) return -kInf;
    return max_ + std::log(scaled_);
}

}  // namespace fockhaus
