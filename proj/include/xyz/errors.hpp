#pragma once

#include <stdexcept>
#include <string>

namespace xyz {

/// Bad arguments: wrong shapes, failed preconditions, malformed input text.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text; line() is 1-based, or 0 when the problem is not tied to a line.
class ParseError : public InputError {
   public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : InputError(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// A search or enumeration ran past its configured operation budget.
class BudgetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Always a bug signal, never a user error.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace xyz
