#pragma once

#include <stdexcept>
#include <string>

namespace sicherman {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CoefficientOverflow : public Error {
public:
    CoefficientOverflow() : Error("coefficient overflow in 64-bit polynomial arithmetic") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero polynomial") {}
};

class NonExactDivision : public Error {
public:
    using Error::Error;
};

class NonInvertibleSeries : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NegativeCoefficient : public Error {
public:
    using Error::Error;
};

class NonzeroConstantTerm : public Error {
public:
    NonzeroConstantTerm() : Error("a die has no face labeled 0 (nonzero constant term)") {}
};

class InvalidTargets : public Error {
public:
    using Error::Error;
};

class NotADivisor : public Error {
public:
    using Error::Error;
};

class UnsupportedShape : public Error {
public:
    using Error::Error;
};

class CertificateMissing : public Error {
public:
    using Error::Error;
};

class SearchCapExceeded : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace sicherman
