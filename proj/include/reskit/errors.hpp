#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reskit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lexical or grammatical error in a polynomial or job description.
/// Positions are 1-based character offsets into the offending text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An oracle that cannot produce a trustworthy value reports this instead
/// of guessing (e.g. a vanishing denominator minor).
class OracleInconclusive : public Error {
public:
    using Error::Error;
};

/// The requested computation exceeds the configured size limits.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

} // namespace reskit
