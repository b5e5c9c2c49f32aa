#pragma once

#include <stdexcept>
#include <string>

namespace dodson {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fractional order or M-Wright index outside its admissible range.
class InvalidOrder : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A numerical scheme failed its own error bound (series cap, refinement
/// disagreement, adaptive quadrature budget).
class NotConverged : public Error {
public:
    using Error::Error;
};

/// A Gamma-function pole was hit where a finite value is required.
class PoleError : public Error {
public:
    using Error::Error;
};

/// No real branch exists for a fractional power of a negative base.
class ComplexBranchError : public Error {
public:
    using Error::Error;
};

class InstabilityError : public Error {
public:
    using Error::Error;
};

/// An output file could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace dodson
