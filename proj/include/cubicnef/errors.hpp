#pragma once

#include <stdexcept>
#include <string>

namespace cubicnef {

/// A mean or argument outside the domain where a family is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Bad user input: unknown family, malformed rational, mismatched specs.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// V(m0) = 0: the sequence and the series have no leading step.
class SingularVarianceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The family has no closed forms for the floating-point layer.
class UnsupportedFamilyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Moment table too short for the requested inner product.
class MomentOrderError : public std::out_of_range {
public:
    MomentOrderError(std::size_t needed, std::size_t available)
        : std::out_of_range("need moment order " + std::to_string(needed) +
                            ", table covers order " + std::to_string(available)),
          needed_(needed) {}

    std::size_t needed() const noexcept { return needed_; }

private:
    std::size_t needed_;
};

/// A polynomial sequence that cannot come from any variance function.
class NonNefSequenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cubicnef
