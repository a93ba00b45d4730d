#pragma once

#include <stdexcept>
#include <string>

namespace lindley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a special function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series, continued fraction or iterative solver ran out of iterations.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Distribution parameters violate the family's constraints.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the requested family.
class FamilyError : public Error {
public:
    using Error::Error;
};

/// Hazard requested where the survival function has underflowed.
class SurvivalUnderflowError : public Error {
public:
    using Error::Error;
};

/// Sample moments that no member of the family can reproduce.
class InfeasibleMomentsError : public Error {
public:
    using Error::Error;
};

/// A bracketed solve found no sign change.
class NoSolutionError : public Error {
public:
    using Error::Error;
};

/// Degenerate, empty or malformed data.
class DataError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace lindley
