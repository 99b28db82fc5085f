#pragma once

#include <stdexcept>
#include <string>

namespace fundop {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquare : Error {
    using Error::Error;
};
struct DimMismatch : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NotPSD : Error {
    using Error::Error;
};
struct NotContraction : Error {
    using Error::Error;
};
struct NotUnitary : Error {
    using Error::Error;
};
struct NotPure : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct ResolventSingular : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct InconsistentEquation : Error {
    using Error::Error;
};
struct NumericalRadiusExceeded : Error {
    using Error::Error;
};
struct PreconditionFailed : Error {
    using Error::Error;
};
// Raised by the JSON layer on malformed matrix files.
struct ParseFailure : Error {
    using Error::Error;
};

} // namespace fundop
