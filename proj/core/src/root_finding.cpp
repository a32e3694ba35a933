#include "jnsvd/root_finding.hpp"

#include <utility>

namespace jnsvd {

Real find_root(const std::function<Real(const Real&)>& f,
               const std::function<Real(const Real&)>& df, Bracket bracket,
               const PrecisionContext& ctx) {
  Real flo = f(bracket.lo);
  Real fhi = f(bracket.hi);
  if (flo.is_zero()) return bracket.lo;
  if (fhi.is_zero()) return bracket.hi;
  if (flo.sign() == fhi.sign())
    throw InvalidInputError("find_root: f has equal signs at bracket endpoints");

  const int lo_sign = flo.sign();
  const Real& tol = ctx.target_tol();
  const long cap = 10L * ctx.bits();

  auto update = [&](const Real& x, const Real& fx) {
    if (fx.sign() == lo_sign)
      bracket.lo = x;
    else
      bracket.hi = x;
  };

  Real x = bracket.midpoint();
  Real fx = f(x);
  for (long it = 0; it < cap; ++it) {
    if (fx.is_zero()) return x;
    update(x, fx);
    if (bracket.width() <= tol) return bracket.midpoint();

    Real dfx = df(x);
    bool bisect = dfx.is_zero() || (it % 3 == 2);
    Real cand = bracket.midpoint();
    if (!bisect) {
      Real step = fx / dfx;
      Real newton = x - step;
      if (newton > bracket.lo && newton < bracket.hi) {
        if (abs(step) < tol / 4L) {
          // Newton has settled; close the bracket around x with two sign
          // probes instead of bisecting the (possibly still wide) interval.
          // Each probe is applied only while strictly inside the current
          // bracket, which keeps the sign-change invariant.
          Real a = x - tol / 3L;
          Real b = x + tol / 3L;
          if (a > bracket.lo && a < bracket.hi) update(a, f(a));
          if (b > bracket.lo && b < bracket.hi) update(b, f(b));
          if (bracket.width() <= tol) return bracket.midpoint();
        }
        if (newton > bracket.lo && newton < bracket.hi)
          cand = std::move(newton);
        else
          cand = bracket.midpoint();
      }
    }
    x = std::move(cand);
    fx = f(x);
  }
  throw NonConvergenceError("find_root: iteration cap of 10*bits reached");
}

}  // namespace jnsvd
