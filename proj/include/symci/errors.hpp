#pragma once

#include <stdexcept>
#include <string>

namespace symci {

// Contract violations carry the offending values in the message; catch sites
// never parse messages, they dispatch on type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPrime : Error { using Error::Error; };
struct NoIrreducibleFound : Error { using Error::Error; };
struct DivisionByZeroPoly : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct StandingAssumptionViolation : Error { using Error::Error; };
struct WorkCeilingExceeded : Error { using Error::Error; };
struct InsufficientScalars : Error { using Error::Error; };
struct NonHomogeneousLeadingPart : Error { using Error::Error; };
struct InvalidPairing : Error { using Error::Error; };
struct InvalidPattern : Error { using Error::Error; };
struct InconsistentSystem : Error { using Error::Error; };
struct CoefficientNotRational : Error { using Error::Error; };
struct NonDivisibleCount : Error { using Error::Error; };
struct HypothesisRangeViolation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace symci
