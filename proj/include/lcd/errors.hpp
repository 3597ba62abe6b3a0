#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit (word lengths, matrix sizes).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Rank-deficient generator or linearly dependent basis words.
class DegenerateCodeError : public Error {
public:
    using Error::Error;
};

/// The requested computation exceeds its feasibility guard or budget.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Row transform by a singular matrix, or a malformed column permutation.
class InvalidTransformError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number of the offending input line.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace lcd
