#pragma once

#include <stdexcept>
#include <string>

namespace terra3d {

// Base class for every error raised by the analysis library. Input and
// validation failures derive from it; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, point sets, networks).
class FormatError : public Error {
public:
    FormatError(const std::string& source, const std::string& what)
        : Error(source.empty() ? what : source + ": " + what) {}
};

// Numerical failure: singular or rank-deficient systems, underdetermined fits.
class NumericError : public Error {
public:
    using Error::Error;
};

// Caller supplied arguments that violate an operation's preconditions.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Raised when the CLI is invoked with a bad option value that CLI11 cannot
// detect on its own (e.g. a malformed --grid spec). Maps to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace terra3d
