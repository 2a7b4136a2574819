#pragma once

#include <stdexcept>
#include <string>

namespace isostrat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (CLI exit code 1).
class InputError : public Error {
public:
    using Error::Error;
};

/// A well-posed question whose answer is "no" within the given bounds
/// (CLI exit code 2).
class MathOutcome : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class GroupNotFiniteWithinCap : public InputError {
public:
    using InputError::InputError;
};

class NonInvertibleGenerator : public InputError {
public:
    using InputError::InputError;
};

class NotASubgroup : public InputError {
public:
    using InputError::InputError;
};

class NotNormal : public InputError {
public:
    using InputError::InputError;
};

class NoLieAction : public InputError {
public:
    using InputError::InputError;
};

class CapExceeded : public InputError {
public:
    using InputError::InputError;
};

class ValidationError : public InputError {
public:
    using InputError::InputError;
};

class TargetNotMonodromyInvariant : public InputError {
public:
    using InputError::InputError;
};

class NoSolutionWithinBound : public MathOutcome {
public:
    using MathOutcome::MathOutcome;
};

class NotAnIsotropyClass : public MathOutcome {
public:
    using MathOutcome::MathOutcome;
};

} // namespace isostrat
