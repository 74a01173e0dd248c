#ifndef FLDT_ERRORS_HPP
#define FLDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fldt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or token string.
struct ParseError : Error {
    using Error::Error;
};

/// A documented precondition of an operation was violated.
struct PreconditionError : Error {
    using Error::Error;
};

/// A configurable size cap (subset states, monoid size, shuffle count) was hit.
struct CapacityError : Error {
    using Error::Error;
};

/// A bounded simulation ran out of steps with live configurations left.
/// Distinct from a reject: the answer is unknown, not "no".
struct IndeterminateError : Error {
    using Error::Error;
};

} // namespace fldt

#endif
