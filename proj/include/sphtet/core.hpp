#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphtet {

// Numeric policy shared by every law in the library.
inline constexpr double kClampTol = 1e-9;   // tolerated arccos-argument overshoot beyond [-1, 1]
inline constexpr double kDetFloor = 1e-12;  // Gram determinant / leading-minor degeneracy floor
inline constexpr double kSinFloor = 1e-12;  // smallest usable sine factor in a denominator
inline constexpr double kDefaultFdStep = 1e-5;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside a law's domain: arc/angle out of (0, pi), or a law quotient
// escaping [-1, 1] by more than kClampTol.
class DomainError : public Error {
public:
    using Error::Error;
};

// Configuration exists but is too flat to compute with (determinant, minor,
// or sine factor below its floor).
class DegenerateError : public Error {
public:
    using Error::Error;
};

// No spherical configuration realizes the given data.
class NotRealizableError : public Error {
public:
    using Error::Error;
};

// A finite-difference perturbation left the valid domain.
class StepTooLargeError : public Error {
public:
    using Error::Error;
};

// Rejection sampling exceeded its redraw budget.
class ExhaustedError : public Error {
public:
    using Error::Error;
};

enum class ValidityCode { Valid, OutOfRange, Degenerate, NotRealizable };

const char* to_string(ValidityCode code);

// Result of a validation check. `detail` carries the Gram determinant (Valid),
// the offending value (OutOfRange), or the collapsed minor / residual
// (Degenerate, NotRealizable).
struct Validity {
    ValidityCode code = ValidityCode::Valid;
    double detail = 0.0;

    bool ok() const { return code == ValidityCode::Valid; }
};

// acos with the shared clamp policy: arguments within kClampTol of +-1 are
// clamped, anything further out is a DomainError.
inline double checked_acos(double q, const char* what) {
    if (q > 1.0) {
        if (q > 1.0 + kClampTol) {
            throw DomainError(std::string(what) + " quotient " + std::to_string(q) +
                              " outside [-1, 1]");
        }
        q = 1.0;
    } else if (q < -1.0) {
        if (q < -1.0 - kClampTol) {
            throw DomainError(std::string(what) + " quotient " + std::to_string(q) +
                              " outside [-1, 1]");
        }
        q = -1.0;
    }
    return std::acos(q);
}

}  // namespace sphtet
