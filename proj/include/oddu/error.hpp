#pragma once

#include <stdexcept>
#include <string>

namespace oddu {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct RingMismatch : Error {
    using Error::Error;
};
struct BadIndex : Error {
    using Error::Error;
};
struct IncompatibleInvolution : Error {
    using Error::Error;
};
struct NotAUnit : Error {
    using Error::Error;
};
struct InvalidFormParameter : Error {
    using Error::Error;
};
struct BadCoordinate : Error {
    using Error::Error;
};
struct InternalInvariantViolation : Error {
    using Error::Error;
};
struct InvalidPhi : Error {
    using Error::Error;
};
struct ConditionUnsolvable : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace oddu
