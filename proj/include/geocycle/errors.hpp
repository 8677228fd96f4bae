#ifndef GEOCYCLE_ERRORS_HPP
#define GEOCYCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geocycle {

// Base class for all library errors that correspond to bad input.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public InputError {
public:
    explicit ParseError(const std::string& msg) : InputError("parse error: " + msg) {}
};

// Two segments overlap along a common line; excluded by general position.
class DegeneracyError : public InputError {
public:
    explicit DegeneracyError(const std::string& msg) : InputError("degeneracy: " + msg) {}
};

class GeneralPositionError : public InputError {
public:
    explicit GeneralPositionError(const std::string& msg)
        : InputError("general position violated: " + msg) {}
};

class DuplicatePointError : public InputError {
public:
    explicit DuplicatePointError(const std::string& msg)
        : InputError("duplicate point: " + msg) {}
};

// Deciders require the standing no-isolated-vertices assumption.
class IsolatedVertexError : public InputError {
public:
    explicit IsolatedVertexError(const std::string& msg)
        : InputError("isolated vertex: " + msg) {}
};

class InvalidColoringError : public InputError {
public:
    explicit InvalidColoringError(const std::string& msg)
        : InputError("invalid coloring: " + msg) {}
};

// Raised when a backtracking search exceeds its node budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(long long budget)
        : std::runtime_error("search node budget exceeded (" + std::to_string(budget) + " nodes)") {}
};

} // namespace geocycle

#endif
