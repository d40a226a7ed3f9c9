#pragma once

#include <stdexcept>
#include <string>

namespace kunum {

/// Base for every domain-level failure raised by the library. The CLI maps
/// these to exit code 3.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VarietyMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace kunum
