#pragma once

#include <stdexcept>
#include <string>

#include "jnsvd/real.hpp"

namespace jnsvd {

/// Raised when an iterative procedure exhausts its iteration cap.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a root scan cannot account for the requested zero count.
class MissedRootError : public NonConvergenceError {
 public:
  using NonConvergenceError::NonConvergenceError;
};

/// Raised on contract violations of inputs (bad brackets, subset sizes,
/// out-of-range indices, malformed configs).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Binary working precision plus the absolute tolerance accepted by
/// iterative procedures. Immutable; threaded through every numeric
/// operation. bits >= 64 and target_tol >= 2^(16-bits) so the tolerance
/// stays representable with guard digits.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned bits)
      : PrecisionContext(bits, Real::pow2(16 - static_cast<long>(bits), bits)) {}

  PrecisionContext(unsigned bits, Real target_tol)
      : bits_(bits), target_tol_(std::move(target_tol)) {
    if (bits_ < 64) throw InvalidInputError("PrecisionContext: bits must be >= 64");
    if (!(target_tol_ > 0L))
      throw InvalidInputError("PrecisionContext: target_tol must be positive");
    if (target_tol_ < Real::pow2(16 - static_cast<long>(bits_), bits_))
      throw InvalidInputError(
          "PrecisionContext: target_tol below 2^(16-bits) is not resolvable");
  }

  unsigned bits() const { return bits_; }
  const Real& target_tol() const { return target_tol_; }

  Real real(long x) const { return Real::from(x, bits_); }
  Real real(double x) const { return Real::from(x, bits_); }
  Real real(const std::string& s) const { return Real::from(s, bits_); }
  Real zero() const { return Real::from(0L, bits_); }
  Real one() const { return Real::from(1L, bits_); }
  Real pi() const { return Real::pi(bits_); }

  /// Same tolerance, wider working precision.
  PrecisionContext raised(unsigned extra_bits) const {
    return PrecisionContext(bits_ + extra_bits, target_tol_.round_to(bits_ + extra_bits));
  }

  /// Decimal digits the context can vouch for (used by serializers).
  int decimal_digits() const {
    return static_cast<int>(static_cast<double>(bits_) * 0.3010299956639812) - 2;
  }

 private:
  unsigned bits_;
  Real target_tol_;
};

}  // namespace jnsvd
