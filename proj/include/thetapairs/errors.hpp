#pragma once

#include <stdexcept>
#include <string>

namespace thetapairs {

// Raised when an input lies outside the exact domain of an operation.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string operation, const std::string& message)
        : std::runtime_error(operation + ": " + message), operation_(std::move(operation)) {}
    const std::string& operation() const { return operation_; }

private:
    std::string operation_;
};

class SplittingFieldTooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

class NotRegular : public DomainError {
public:
    using DomainError::DomainError;
};

class ConjugationOutsideField : public DomainError {
public:
    using DomainError::DomainError;
};

class TripleNotFound : public DomainError {
public:
    using DomainError::DomainError;
};

class EnumerationBoundExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

class Unsupported : public DomainError {
public:
    using DomainError::DomainError;
};

// A catalog entry or internal construction broke one of its invariants.
class InvariantViolation : public DomainError {
public:
    using DomainError::DomainError;
};

class SpecParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace thetapairs
