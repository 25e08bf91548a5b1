#ifndef AMCURVE_ERRORS_HPP
#define AMCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated a precondition (bad prime, degree mismatch, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An input object is not a member of the family it claims to be
/// (inseparable polynomial, both factors q^k-linearized, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed; indicates a bug, not bad input.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// A computation was refused because it exceeds desk scale.
class GuardError : public Error {
public:
    using Error::Error;
};

/// A search exceeded its candidate-evaluation budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Malformed file or inline input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace amc

#endif
