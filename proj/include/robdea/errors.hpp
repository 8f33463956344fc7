#pragma once

#include <stdexcept>
#include <string>

namespace robdea {

// Malformed user input: bad dimensions, out-of-range indices, unparsable data.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical breakdown that must never degrade into a silently wrong answer:
// pivot collapse, iteration-limit hits, failed post-solve verification.
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural assumption of the algorithm was violated at runtime
// (e.g. a bisection bracket that should be infeasible is feasible).
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace robdea
