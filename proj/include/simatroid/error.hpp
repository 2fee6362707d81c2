#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simatroid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic between scalars or matrices over different fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// A brute-force computation refused because its input exceeds a guard.
/// Callers that report results map this onto the "inconclusive" state.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed instance or certificate text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace simatroid
