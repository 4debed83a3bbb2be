#pragma once

#include <stdexcept>
#include <string>

namespace rieszlab {

// Base class for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments or a violated precondition.
class UsageError : public Error {
public:
    using Error::Error;
};

// Evaluation requested at a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// A series or quadrature failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// The requested accuracy is unreachable at the configured precision.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// A documented resource cap (memory, term budget) would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Two independent internal methods disagreed beyond tolerance.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Root bracketing failed (no sign change in the search interval).
class BracketError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

// A file exists but does not match the expected format.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace rieszlab
