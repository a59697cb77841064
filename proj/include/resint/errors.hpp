#ifndef RESINT_ERRORS_HPP
#define RESINT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resint {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression text could not be parsed; offset is the byte position of the
// first offending character (end-of-input errors point one past the text).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Pointwise evaluation failed: division by zero, log of zero, overflow.
class EvalError : public Error {
public:
    using Error::Error;
};

// A numeric scheme did not reach its tolerance (depth cap, stagnation, ...).
class QuadratureError : public Error {
public:
    using Error::Error;
};

// Pole-related violations: pole on a contour, wrong multiplicity,
// root iteration failure.
class PoleError : public Error {
public:
    using Error::Error;
};

// A half-plane theorem was invoked with failing hypotheses.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Invalid user-supplied parameters (nonpositive a/b/r, c <= a, bad tol ...).
class ParamError : public Error {
public:
    using Error::Error;
};

} // namespace resint

#endif
