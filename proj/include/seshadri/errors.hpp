#pragma once

#include <stdexcept>
#include <string>

namespace seshadri {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};
struct NotAnObstructionError : Error {
    using Error::Error;
};
struct InvalidTransformError : Error {
    using Error::Error;
};
struct InvalidParameterError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct InvalidConfigurationError : Error {
    using Error::Error;
};
struct SurjectivityRequiredError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct ZeroSectionError : Error {
    using Error::Error;
};
struct InvariantViolationError : Error {
    using Error::Error;
};
struct RangeError : Error {
    using Error::Error;
};
struct NumericalInstabilityError : Error {
    using Error::Error;
};
struct BoundInconsistencyError : Error {
    using Error::Error;
};

}  // namespace seshadri
