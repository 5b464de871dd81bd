#pragma once

#include <stdexcept>
#include <string>

namespace qre {

// common base so callers can catch everything the engine throws
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a type invariant or operation precondition was violated
struct ValidationError : Error {
    using Error::Error;
};

// malformed input data (catalog / config files); message carries a locator
struct ParseError : Error {
    using Error::Error;
};

// configuration file is structurally valid but unusable (missing fit
// coefficients, empty code family, ...)
struct ConfigError : Error {
    using Error::Error;
};

// scalability law produced a rate >= 1: the device cannot operate at that size
struct RateSaturated : Error {
    using Error::Error;
};

// physical rate at or above the code threshold; no fault-tolerant gain
struct AboveThreshold : Error {
    using Error::Error;
};

// argument outside the domain of a special-function branch
struct DomainError : Error {
    using Error::Error;
};

// bisection endpoints do not bracket the threshold
struct BracketError : Error {
    using Error::Error;
};

// closed-form distance: W argument below -1/e, no real crossing exists
struct NoRealSolution : Error {
    using Error::Error;
};

// closed-form distance: V*O <= 1, the derivation's ln(b) loses its sign
struct DegenerateVolume : Error {
    using Error::Error;
};

}  // namespace qre
