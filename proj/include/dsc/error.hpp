#pragma once

#include <stdexcept>
#include <string>

namespace dsc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built over different fields.
class SpecMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Raised when a requested enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, double required)
        : Error(what), required_(required) {}
    double required() const { return required_; }

private:
    double required_;
};

class StructuralError : public Error {
public:
    using Error::Error;
};

}  // namespace dsc
