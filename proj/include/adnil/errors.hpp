#pragma once

#include <stdexcept>
#include <string>

namespace adnil {

// Bad caller input: malformed partitions, roots outside the system, sizes
// out of range. The CLI maps these to exit code 1.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A partition that is not a valid orbit label for the requested type.
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

// An identity that the mathematics guarantees did not hold. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace adnil
