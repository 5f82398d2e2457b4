#pragma once

#include <stdexcept>
#include <string>

namespace binomverify {

// Two truncated series of different orders were combined.
class order_mismatch_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A subset-enumeration instance exceeds the configured resource cap.
class enumeration_cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in identity source text. Positions are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line, int column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          message_(message),
          line_(line),
          column_(column) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

// Evaluation failed: unbound variable, non-integer index, bad exponent, ...
class eval_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace binomverify
