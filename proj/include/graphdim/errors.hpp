#pragma once

#include <stdexcept>
#include <string>

namespace graphdim {

/// Evaluation failed (bad argument range, division by zero, ...).
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Reciprocal (or decomposition input) hit or came too close to zero.
class ZeroCrossingError : public EvalError {
public:
    using EvalError::EvalError;
};

/// Expression text failed to parse; position() is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A decomposition target is unreachable (beta below the estimated
/// dimension, or the unsupported beta = 2 endpoint).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graphdim
