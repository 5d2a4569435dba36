#pragma once

#include <stdexcept>

namespace fibrec {

/// Input outside an operation's mathematical domain (e.g. the interval
/// criterion at b = 0, a zero denominator, classification off the ground
/// eigenspace).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Attempt to build an observable that violates block structure or
/// self-adjointness.
struct ConstructionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid convex weights for a sector combination.
struct WeightError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Observable and state are defined over different bases.
struct BasisMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace fibrec
