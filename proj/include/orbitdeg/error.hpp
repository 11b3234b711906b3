#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace orbitdeg {

// Errors split by who is at fault: InputError means the caller supplied
// something outside a precondition, MathError means a computed result
// contradicts a stated mathematical claim.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class MathError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public InputError {
public:
    using InputError::InputError;
};

class VariableMismatch : public InputError {
public:
    using InputError::InputError;
};

class NonHomogeneous : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t position, const std::string& reason)
        : InputError("parse error at position " + std::to_string(position) + ": " + reason),
          position_(position), reason_(reason) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

class SingularCurve : public InputError {
public:
    explicit SingularCurve(const std::string& what, std::optional<std::string> witness = std::nullopt)
        : InputError(what), witness_(std::move(witness)) {}

    // Projective coordinates of a singular point, when one is rational.
    const std::optional<std::string>& witness() const noexcept { return witness_; }

private:
    std::optional<std::string> witness_;
};

class GenericityFailure : public MathError {
public:
    using MathError::MathError;
};

class InconsistentProfile : public MathError {
public:
    using MathError::MathError;
};

class NonDivisible : public MathError {
public:
    using MathError::MathError;
};

} // namespace orbitdeg
