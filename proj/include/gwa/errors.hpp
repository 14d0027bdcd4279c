#ifndef GWA_ERRORS_HPP
#define GWA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwa {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated precondition or invariant (division by zero, rank mismatch, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// Text that does not match the number-literal or config grammar.
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t column = 0;

    ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// Requested computation exceeds the configured size limits.
struct SizeLimitError : Error {
    using Error::Error;
};

/// A module action stepped outside the realized window box.
struct WindowOverflow : Error {
    using Error::Error;
};

}  // namespace gwa

#endif
