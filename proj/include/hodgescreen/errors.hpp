#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// Base for every error raised by the library. Math-domain failures derive
// from DomainError so frontends can map them to one exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public DomainError {
public:
    using DomainError::DomainError;
};

class IncompleteGrading : public DomainError {
public:
    using DomainError::DomainError;
};

class NotAHodgeFiltration : public DomainError {
public:
    using DomainError::DomainError;
};

class PrecisionExhausted : public DomainError {
public:
    using DomainError::DomainError;
};

class DenominatorVanishes : public DomainError {
public:
    using DomainError::DomainError;
};

class IdentityViolation : public DomainError {
public:
    using DomainError::DomainError;
};

// A basis that fails the bracket-closure test; carries the offending pair.
class NotClosedError : public DomainError {
public:
    NotClosedError(std::size_t i, std::size_t j)
        : DomainError("bracket of basis elements " + std::to_string(i) + " and " +
                      std::to_string(j) + " leaves the span"),
          first(i), second(j) {}
    std::size_t first;
    std::size_t second;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace hodge
