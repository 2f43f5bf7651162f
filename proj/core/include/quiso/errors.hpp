#ifndef QUISO_ERRORS_HPP
#define QUISO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quiso {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural problem with a quiver, representation, or input file.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Requested enumeration would exceed the configured cycle-count budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace quiso

#endif
