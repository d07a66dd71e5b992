#pragma once

#include <stdexcept>
#include <string>

namespace ilink {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

/// Deleting a simplex that is a proper face of another member.
class InvalidDeletion : public Error {
public:
    using Error::Error;
};

class UnsupportedSize : public Error {
public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

/// A geometric predicate hit an exact zero; the caller is expected to resample.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

class SamplingError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace ilink
