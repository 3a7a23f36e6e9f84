#pragma once

#include <stdexcept>
#include <string>

namespace specstats {

// Requested degree or size is beyond the configured enumeration caps.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A convolution inverse does not exist (singular class-algebra system).
class NotInvertibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Statistic degree exceeds the sample size (i > m).
class DegreeExceedsSampleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input text; carries the 1-based line and token position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int token)
        : std::runtime_error(message), line_(line), token_(token) {}
    int line() const { return line_; }
    int token() const { return token_; }

private:
    int line_;
    int token_;
};

}  // namespace specstats
