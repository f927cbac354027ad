#pragma once

#include <stdexcept>

namespace qadele {

// Malformed input text or files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated precondition (non-unit input, p = 2, dimension mismatch, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration would exceed the caller-supplied budget.
struct BudgetError : DomainError {
    using DomainError::DomainError;
};

} // namespace qadele
