#pragma once

#include <stdexcept>
#include <string>

namespace sp2kit {

/// Non-finite or otherwise unusable scalar argument.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix violates the unit-determinant (or finiteness) invariant.
class InvalidMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result left the representable floating-point range.
class Overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Parameters outside the range over which a numerical routine is validated.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace sp2kit
