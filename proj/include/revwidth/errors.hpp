#pragma once

#include <stdexcept>
#include <string>

namespace revwidth {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Iterative numerical procedure failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root finder called without a sign change on the bracket.
struct BracketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Boundary curvature changes sign within a smooth branch.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClassificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HomologyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IntegralityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Resonant orbit where the Conley-Zehnder index jumps.
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonClosureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A constructed certificate (packing, inclusion) failed its own check.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace revwidth
