#pragma once

#include <stdexcept>
#include <string>

namespace fockhaus {

/// Base class for every mathematical precondition failure raised by the
/// library. The CLI maps these to exit code 2.
class MathError : public std::runtime_error {
public:
    MathError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DivergentMoment : public MathError {
public:
    explicit DivergentMoment(const std::string& what) : MathError("DivergentMoment", what) {}
};

class DomainError : public MathError {
public:
    explicit DomainError(const std::string& what) : MathError("DomainError", what) {}
};

class ZeroMeasure : public MathError {
public:
    explicit ZeroMeasure(const std::string& what) : MathError("ZeroMeasure", what) {}
};

class TruncationError : public MathError {
public:
    explicit TruncationError(const std::string& what) : MathError("TruncationError", what) {}
};

class IllDefined : public MathError {
public:
    explicit IllDefined(const std::string& what) : MathError("IllDefined", what) {}
};

class CriterionInapplicable : public MathError {
public:
    explicit CriterionInapplicable(const std::string& what)
        : MathError("CriterionInapplicable", what) {}
};

class HypothesisNotDeclared : public MathError {
public:
    explicit HypothesisNotDeclared(const std::string& what)
        : MathError("HypothesisNotDeclared", what) {}
};

/// Malformed input documents (measure JSON, function descriptors). Not a
/// mathematical failure: the CLI treats it as a usage error.
class SpecError : public std::invalid_argument {
public:
    explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fockhaus
