#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (CLI exit code 3).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotGraphical : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotMonotone : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class OutOfRange : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidScale : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidArgument : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class SelfLoop : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class MleDoesNotExist : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class DatasetCorrupt : public Error {
public:
    using Error::Error;
};

/// Malformed text input; `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace gdp
