#pragma once

#include <stdexcept>
#include <string>

namespace sl2lab {

// Two normal forms built with different lambda were combined.
struct ParameterMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside an operation's domain (e.g. lambda not an even integer).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A checked algebraic identity failed; signals a bug, never bad input.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string message, int line_, int column_)
        : std::runtime_error(std::move(message)), line(line_), column(column_) {}
};

}  // namespace sl2lab
