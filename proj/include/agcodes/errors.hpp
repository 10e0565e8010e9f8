#pragma once

#include <stdexcept>
#include <string>

namespace agcodes {

/// Raised when a series operation would need coefficients beyond the known
/// window.  Callers that can re-expand at higher precision catch this.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text parsers; carries a 1-based source location.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace agcodes
