#pragma once

#include <stdexcept>
#include <string>

namespace tca {

// Bad user input: malformed scalars, non-square matrices, invalid actions,
// same-orbit points and so on. The CLI maps these to exit status 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scalars from two different cyclotomic fields were combined.
class FieldMismatch : public InputError {
public:
    using InputError::InputError;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A mathematical identity that must hold failed. This signals a bug (or a
// corrupted input that slipped past validation); the CLI exits with status 1.
class CheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tca
