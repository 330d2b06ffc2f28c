#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

namespace fockhaus {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// An integrability exponent p in (0, inf]. The distinguished value infinity
/// selects sup-norms.
class Exponent {
public:
    constexpr Exponent() = default;
    explicit Exponent(double value);

    static Exponent infinity() { return Exponent(kInf); }
    static Exponent parse(std::string_view text);

    constexpr double value() const noexcept { return value_; }
    constexpr bool is_infinite() const noexcept { return value_ == kInf; }
    /// 1/p with 1/inf = 0.
    constexpr double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / value_; }

    std::string to_string() const;

    friend constexpr bool operator==(Exponent a, Exponent b) { return a.value_ == b.value_; }
    friend constexpr auto operator<=>(Exponent a, Exponent b) { return a.value_ <=> b.value_; }

private:
    double value_ = 2.0;
};

double log_gamma(double x);
double log_beta(double a, double b);

/// Report formatting: 12 significant digits, "inf" for infinity.
std::string format_number(double x);

/// log(exp(a) + exp(b)) without overflow; -inf is the additive identity.
double log_add(double a, double b);

/// Streaming log-sum-exp accumulator.
class LogSum {
public:
    void add(double log_term);
    void add_weighted(double log_term, double weight) { add(log_term + std::log(weight)); }
    double log_value() const;
    bool empty() const noexcept { return max_ == -kInf; }

private:
    double max_ = -kInf;
    double scaled_ = 0.0;
};

}  // namespace fockhaus
