#pragma once

#include <stdexcept>
#include <string>

namespace qtheta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lowest nonzero coefficient of a series is not +1 or -1, so the series has
// no inverse over the integers.
struct NonUnitLeadingCoefficient final : Error {
  using Error::Error;
};

// Gaussian binomial requested with k > n. Out-of-range is an error, not a
// zero polynomial: silent zeros would mask caller bugs.
struct IndexOutOfRange final : Error {
  using Error::Error;
};

// Exact evaluation requested on a truncated series.
struct NotAPolynomial final : Error {
  using Error::Error;
};

// Coefficient requested at or beyond the truncation order.
struct BeyondTruncation final : Error {
  using Error::Error;
};

// Partition enumeration requested beyond the configured ceiling.
struct CeilingExceeded final : Error {
  using Error::Error;
};

struct UnknownProduct final : Error {
  using Error::Error;
};

struct UnknownIdentity final : Error {
  using Error::Error;
};

struct MissingParameter final : Error {
  using Error::Error;
};

}  // namespace qtheta
