#ifndef QUANTFAM_ERRORS_HPP_
#define QUANTFAM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace quantfam {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter violates a family constraint. Carries the offending field,
/// its value and a human-readable bound description.
class InvalidParameter : public Error {
public:
    InvalidParameter(std::string field, double value, std::string bound)
        : Error("invalid parameter '" + field + "' = " + std::to_string(value) +
                " (requires " + bound + ")"),
          field_(std::move(field)), value_(value), bound_(std::move(bound)) {}

    const std::string& field() const { return field_; }
    double value() const { return value_; }
    const std::string& bound() const { return bound_; }

private:
    std::string field_;
    double value_;
    std::string bound_;
};

/// x lies outside the range of the quantile transform.
class NotInSupport : public Error {
public:
    explicit NotInSupport(double x)
        : Error("value " + std::to_string(x) + " is outside the distribution support"), x_(x) {}
    double x() const { return x_; }

private:
    double x_;
};

/// An iterative scheme exhausted its iteration budget.
class NoConvergence : public Error {
public:
    explicit NoConvergence(int iters)
        : Error("no convergence after " + std::to_string(iters) + " iterations"), iters_(iters) {}
    int iters() const { return iters_; }

private:
    int iters_;
};

class MomentDoesNotExist : public Error {
public:
    explicit MomentDoesNotExist(const std::string& msg) : Error(msg) {}
};

/// Tail probe of a moment integrand grew instead of decaying.
class Divergent : public Error {
public:
    explicit Divergent(const std::string& msg) : Error(msg) {}
};

class UnsupportedFamily : public Error {
public:
    explicit UnsupportedFamily(const std::string& msg) : Error(msg) {}
};

class PoleInput : public Error {
public:
    explicit PoleInput(double x)
        : Error("function pole at x = " + std::to_string(x)) {}
};

class TooFewObservations : public Error {
public:
    TooFewObservations(std::size_t n, std::size_t required)
        : Error("need at least " + std::to_string(required) + " observations, got " +
                std::to_string(n)) {}
};

class DegenerateSample : public Error {
public:
    explicit DegenerateSample(const std::string& msg) : Error(msg) {}
};

class ConstraintViolation : public Error {
public:
    explicit ConstraintViolation(const std::string& msg) : Error(msg) {}
};

class NonFiniteObjective : public Error {
public:
    explicit NonFiniteObjective(const std::string& msg) : Error(msg) {}
};

class NoRoot : public Error {
public:
    explicit NoRoot(const std::string& msg) : Error(msg) {}
};

class AllPointsOutsideSupport : public Error {
public:
    explicit AllPointsOutsideSupport(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace quantfam

#endif  // QUANTFAM_ERRORS_HPP_
