#pragma once

#include <stdexcept>
#include <string>

namespace affinefc {

/// Base class for all precondition violations reported by the library.
/// The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotReducedError : DomainError {
    using DomainError::DomainError;
};

struct NotFullyCommutativeError : DomainError {
    using DomainError::DomainError;
};

struct WrongFamilyError : DomainError {
    using DomainError::DomainError;
};

struct NotIrreducibleError : DomainError {
    using DomainError::DomainError;
};

struct IllegalMoveError : DomainError {
    using DomainError::DomainError;
};

struct RankMismatchError : DomainError {
    using DomainError::DomainError;
};

struct NonPlanarInputError : DomainError {
    using DomainError::DomainError;
};

/// Raised when an enumeration or exhaustive search exceeds its configured
/// resource cap.  Exceeding a budget is an explicit failure, never a
/// silent truncation.
struct BudgetExceededError : DomainError {
    using DomainError::DomainError;
};

}  // namespace affinefc
