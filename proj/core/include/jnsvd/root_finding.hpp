#pragma once

#include <functional>

#include "jnsvd/precision.hpp"

namespace jnsvd {

/// Root-bracketing interval; the bracketed function must change sign on it.
struct Bracket {
  Real lo, hi;

  Bracket(Real lo_, Real hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw InvalidInputError("Bracket: requires lo < hi");
  }
  Real width() const { return hi - lo; }
  Real midpoint() const { return (lo + hi) / 2L; }
};

/// Safeguarded Newton: steps that leave the current bracket (or fail to
/// shrink it) fall back to bisection, so convergence is unconditional for a
/// sign-changing continuous f. Returns z with the bracket width below
/// ctx.target_tol and |f(z)| <= 8 |f'(z)| ctx.target_tol.
///
/// Throws InvalidInputError when f(lo) and f(hi) have equal signs and
/// NonConvergenceError after 10*bits iterations.
Real find_root(const std::function<Real(const Real&)>& f,
               const std::function<Real(const Real&)>& df, Bracket bracket,
               const PrecisionContext& ctx);

}  // namespace jnsvd
