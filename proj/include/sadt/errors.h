#pragma once

#include <stdexcept>
#include <string>

namespace sadt {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed PGM header or magic.
class FormatError : public Error {
public:
    using Error::Error;
};

// Raster shorter than the header declares.
class TruncatedError : public Error {
public:
    using Error::Error;
};

// Valid Netpbm, but outside what we handle (e.g. maxval > 255).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// NaN or infinity reached a transform.
class NumericError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// Quantity has no value for the given input (image fidelity of an all-black reference).
class UndefinedError : public Error {
public:
    using Error::Error;
};

}  // namespace sadt
