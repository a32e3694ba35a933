#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "jnsvd/precision.hpp"

namespace jnsvd {

/// Gauss-Legendre rule on [0,1]: strictly increasing nodes, positive weights.
struct QuadratureRule {
  int m = 0;
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// Nodes by Newton refinement of P_m; rules are cached per (m, bits) and the
/// cache is safe for concurrent lookup. Throws NonConvergenceError if node
/// refinement does not settle within the iteration cap.
std::shared_ptr<const QuadratureRule> gauss_legendre_rule(int m,
                                                          const PrecisionContext& ctx);

using RealFunction = std::function<Real(const Real&)>;

/// Adaptive integral of f over [0,1]: the node count doubles from
/// initial_nodes until two successive rules agree within ctx.target_tol.
/// Hard error after max_doublings.
Real integrate(const RealFunction& f, const PrecisionContext& ctx,
               int initial_nodes = 8, int max_doublings = 20);

/// L2 inner product over [0,1] of two pointwise-evaluable functions.
Real inner_product(const RealFunction& f, const RealFunction& g,
                   const PrecisionContext& ctx, int initial_nodes = 8);

/// L2 norm over [0,1].
Real l2_norm(const RealFunction& f, const PrecisionContext& ctx,
             int initial_nodes = 8);

}  // namespace jnsvd
