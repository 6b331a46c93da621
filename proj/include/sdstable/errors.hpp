#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdstable {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad construction arguments, unparsable text, bad files.
// The CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// A mathematical precondition does not hold for the given data.
// The CLI maps these to exit code 3.
struct MathError : Error {
    using Error::Error;
};

struct ParseError final : InputError {
    using InputError::InputError;
};

// common_prefix_len over numbers with different digit set or exponent.
struct MismatchedFormat final : InputError {
    using InputError::InputError;
};

// Representation-interval results are only proven for gamma = radix - 1.
struct NotMaximallyRedundant final : MathError {
    using MathError::MathError;
};

// append_digits target outside the open representation interval.
struct TargetOutsideInterval final : MathError {
    using MathError::MathError;
};

// An iterate is not exactly representable within the digit budget.
struct ExactRepresentationExceedsBudget final : MathError {
    using MathError::MathError;
};

struct NotFejerMonotone final : MathError {
    NotFejerMonotone(const std::string& what, std::size_t index)
        : MathError(what), violating_index(index) {}
    // Index of the first iterate whose distance to the fixed point grew.
    std::size_t violating_index;
};

struct NotContractive final : MathError {
    using MathError::MathError;
};

struct SingularSplitting final : MathError {
    using MathError::MathError;
};

struct SingularSystem final : MathError {
    using MathError::MathError;
};

struct DerivativeZero final : MathError {
    using MathError::MathError;
};

}  // namespace sdstable
