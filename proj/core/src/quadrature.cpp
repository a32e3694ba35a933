#include "jnsvd/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace jnsvd {

namespace {

// P_m(x) and P_m'(x) on [-1,1] by the three-term recurrence.
void legendre_pair(int m, const Real& x, Real& p, Real& dp) {
  mpfr_prec_t prec = x.prec();
  Real pm1 = Real::from(1L, prec);  // P_0
  Real pm = x;                      // P_1
  for (int k = 1; k < m; ++k) {
    Real next = ((2 * k + 1) * (x * pm) - k * pm1) / (k + 1);
    pm1 = std::move(pm);
    pm = std::move(next);
  }
  if (m == 0) {
    p = pm1;
    dp = Real::from(0L, prec);
    return;
  }
  p = pm;
  // P_m' = m (x P_m - P_{m-1}) / (x^2 - 1)
  dp = Real::from(static_cast<long>(m), prec) * (x * pm - pm1) / (x * x - 1L);
}

QuadratureRule build_rule(int m, unsigned bits) {
  const mpfr_prec_t final_prec = static_cast<mpfr_prec_t>(bits) + 32;
  QuadratureRule rule;
  rule.m = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Classic seed for the i-th positive-side root, then a precision ladder:
    // each doubling of working precision needs only a couple of Newton steps.
    double seed = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    Real x = Real::from(seed, 96);
    for (mpfr_prec_t p = 96;; p = std::min<mpfr_prec_t>(p * 2, final_prec)) {
      x = x.round_to(p);
      Real px(p), dpx(p);
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        legendre_pair(m, x, px, dpx);
        Real step = px / dpx;
        x -= step;
        if (abs(step) <= ldexp2(abs(x) + 1L, -(p - 8))) {
          converged = true;
          break;
        }
      }
      if (!converged)
        throw NonConvergenceError("gauss_legendre_rule: node refinement stalled");
      if (p == final_prec) break;
    }
    Real px(final_prec), dpx(final_prec);
    legendre_pair(m, x, px, dpx);
    Real w = 2L / ((1L - x * x) * dpx * dpx);
    // Map [-1,1] -> [0,1]; x is the (m-1-i)-th node in increasing order.
    rule.nodes[m - 1 - i] = ((x + 1L) / 2L).round_to(bits);
    rule.weights[m - 1 - i] = (w / 2L).round_to(bits);
    rule.nodes[i] = ((1L - x) / 2L).round_to(bits);
    rule.weights[i] = rule.weights[m - 1 - i];
  }
  if (m % 2 == 1) {
    // Middle node is exactly 1/2 (x = 0).
    Real x = Real::from(0L, final_prec);
    Real px(final_prec), dpx(final_prec);
    legendre_pair(m, x, px, dpx);
    rule.nodes[half - 1] = Real::from(0.5, bits);
    rule.weights[half - 1] = (1L / (dpx * dpx)).round_to(bits);
  }
  return rule;
}

std::mutex g_cache_mutex;
std::map<std::pair<int, unsigned>, std::shared_ptr<const QuadratureRule>> g_cache;

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_legendre_rule(int m,
                                                          const PrecisionContext& ctx) {
  if (m < 1) throw InvalidInputError("gauss_legendre_rule: m must be >= 1");
  const auto key = std::make_pair(m, ctx.bits());
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(build_rule(m, ctx.bits()));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_cache.emplace(key, std::move(rule)).first->second;
}

namespace {

Real apply_rule(const QuadratureRule& rule, const RealFunction& f) {
  Real acc = Real::from(0L, rule.nodes.front().prec());
  for (int i = 0; i < rule.m; ++i) acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

}  // namespace

Real integrate(const RealFunction& f, const PrecisionContext& ctx,
               int initial_nodes, int max_doublings) {
  if (initial_nodes < 1) initial_nodes = 1;
  int m = initial_nodes;
  Real prev = apply_rule(*gauss_legendre_rule(m, ctx), f);
  for (int d = 0; d < max_doublings; ++d) {
    m *= 2;
    Real cur = apply_rule(*gauss_legendre_rule(m, ctx), f);
    if (abs(cur - prev) <= ctx.target_tol()) return cur;
    prev = std::move(cur);
  }
  throw NonConvergenceError("integrate: no agreement after " +
                            std::to_string(max_doublings) + " node doublings");
}

Real inner_product(const RealFunction& f, const RealFunction& g,
                   const PrecisionContext& ctx, int initial_nodes) {
  return integrate([&](const Real& t) { return f(t) * g(t); }, ctx, initial_nodes);
}

Real l2_norm(const RealFunction& f, const PrecisionContext& ctx, int initial_nodes) {
  Real sq = integrate([&](const Real& t) { Real v = f(t); return v * v; }, ctx,
                      initial_nodes);
  if (sq < 0L) sq = ctx.zero();  // quadrature noise around an exact zero
  return sqrt(sq);
}

}  // namespace jnsvd
