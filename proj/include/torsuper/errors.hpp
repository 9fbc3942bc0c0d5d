#pragma once

#include <stdexcept>

namespace torsuper {

/// Base class for every recoverable error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficient or exponent arithmetic left the 64-bit range.
struct overflow_error : error {
  using error::error;
};

/// (m,n) is not a pair of coprime positive integers.
struct invalid_shape : error {
  using error::error;
};

/// A step sequence does not describe an (m,n)-Dyck path.
struct invalid_path : error {
  using error::error;
};

/// A path handed to unstar is not the image of star.
struct structural_error : error {
  using error::error;
};

/// A substitution is malformed or would leave the integer Laurent ring.
struct specialization_error : error {
  using error::error;
};

/// A monomial that is not expressible in the requested variables.
struct conversion_error : error {
  using error::error;
};

/// Polynomial division left a nonzero remainder.
struct inexact_division : error {
  using error::error;
};

/// An internal invariant was observed to fail. Always a bug.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace torsuper
