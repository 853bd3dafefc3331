#pragma once

#include <stdexcept>
#include <string>

namespace pantostar {

/// Reason codes for problem-definition rejections.
enum class ValidationIssue {
    q_out_of_range,    // q <= 1
    horizon_too_short, // T_1 <= 0 or T_j <= (q-1)T_1 for some j >= 2
    nonpositive_weight,
    too_few_edges,     // m < 2
    bad_shape,         // array length mismatch or non-finite input
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationIssue issue, const std::string& what)
        : std::runtime_error(what), issue_(issue) {}
    ValidationIssue issue() const { return issue_; }

private:
    ValidationIssue issue_;
};

/// Thrown when a delayed argument falls below the admissible history window.
class OutOfHistoryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The discrete energy form failed its positive-definiteness probe.
class IndefiniteFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The iterative linear solver stagnated before reaching its tolerance.
class SolverDivergedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An oracle was invoked on a system outside its closed-form regime.
class WrongRegimeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace pantostar
