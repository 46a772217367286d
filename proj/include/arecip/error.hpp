#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arecip {

// Error kinds surfaced by the library. The CLI maps them to exit codes.
enum class ErrorKind {
    ZeroPolynomial,
    Parse,
    NonIrreducibleBase,
    UnsupportedFactorization,
    InsufficientPrecision,
    FactorizationTimeout,
    RootFindingDivergence,
    EvaluationAtZero,
    ReductionUndefined,
    NotExact,
    WindowTooSmall,
    NonCommuting,
    DegeneratePosition,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class InsufficientPrecision : public Error {
public:
    InsufficientPrecision(int tried, const std::string& what)
        : Error(ErrorKind::InsufficientPrecision, what), tried_(tried) {}
    // Precision (p-adic digits or bits) that was insufficient.
    int tried() const noexcept { return tried_; }

private:
    int tried_;
};

class WindowTooSmall : public Error {
public:
    WindowTooSmall(int min_low, int min_high)
        : Error(ErrorKind::WindowTooSmall,
                "window too small; need at least (" + std::to_string(min_low) + ", " +
                    std::to_string(min_high) + ")"),
          min_low_(min_low), min_high_(min_high) {}
    int min_low() const noexcept { return min_low_; }
    int min_high() const noexcept { return min_high_; }

private:
    int min_low_;
    int min_high_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace arecip
