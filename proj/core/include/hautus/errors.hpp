#pragma once

#include <stdexcept>
#include <string>

namespace hautus {

// Raised when an internal invariant is violated (e.g. a torsion witness that
// fails its own verification). Callers must treat this as a hard abort: the
// CLI maps it to exit code 2 and never prints a partial result.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// Raised by the text-format parsers; carries a 1-based source position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace hautus
