#pragma once

#include <stdexcept>
#include <string>

namespace rejodds {

// Invalid argument or input outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A requested target (odds, ratio, alpha) cannot be met by any feasible input.
class InfeasibleTargetError : public DomainError {
public:
    using DomainError::DomainError;
};

// The model family is not supported by the requested operation.
class UnsupportedModelError : public DomainError {
public:
    using DomainError::DomainError;
};

// An iterative routine exhausted its budget before reaching tolerance.
// Carries the best estimate found and the estimated error bound.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate(best_estimate), error_bound(error_bound) {}

    double best_estimate;
    double error_bound;
};

// Monte Carlo retained too few draws to form an estimate.
class InsufficientSampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input record; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}

    long line;
};

// Structurally valid input that violates a semantic constraint.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what, long line = -1)
        : std::invalid_argument(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line(line) {}

    long line;
};

}  // namespace rejodds
