#pragma once

#include <stdexcept>
#include <string>

namespace rwm {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector dimensions do not line up.
struct ShapeError : Error {
    using Error::Error;
};

// Caller handed in data that violates a precondition (bad label, empty
// class, non-finite input, ...).
struct InputError : Error {
    using Error::Error;
};

// Invalid configuration: bad hyperparameter, unknown config key, missing
// required field.
struct ConfigError : Error {
    using Error::Error;
};

// A numerical operation could not be completed (singular system, projector
// fully annihilated, non-finite intermediate).
struct NumericError : Error {
    using Error::Error;
};

// A file could not be parsed (syntax-level problem, reported with line info).
struct ParseError : Error {
    using Error::Error;
};

// A file parsed but violates the format contract (dimension drift, bad magic).
struct FormatError : Error {
    using Error::Error;
};

} // namespace rwm
