#pragma once

#include <string>
#include <vector>

#include "jnsvd/precision.hpp"

namespace jnsvd {

/// One summand coeff * cosh(alpha z) * cos(beta z), alpha,beta >= 0.
/// Terms with identical (alpha, beta) are merged at build time.
struct CoshCosTerm {
  Real coeff;
  Real alpha;
  Real beta;
};

/// The transcendental function F_n(z) whose positive zeros give the
/// eigenvalues lambda = z^(-2n). Normalized so the unique maximal-alpha term
/// has coefficient exactly 1; terms sorted by decreasing alpha.
struct CharEquation {
  int n = 0;
  std::vector<CoshCosTerm> terms;
  std::string scale_convention;  // "max-alpha-unit"
  unsigned built_bits = 0;

  const Real& alpha_max() const { return terms.front().alpha; }
};

/// Assembles F_n from the subset orbits and their coefficients; 1 <= n <= 12.
CharEquation build_char_equation(int n, const PrecisionContext& ctx);

/// F_n(z) * exp(-alpha_max z): finite and O(1)-scaled for every z >= 0, with
/// the same sign and zeros as F_n. Each term is computed from decaying
/// exponentials only, so no cancellation of large intermediates occurs.
Real evaluate_scaled(const CharEquation& eq, const Real& z, const PrecisionContext& ctx);

/// d/dz of evaluate_scaled (analytic, term-wise).
Real evaluate_derivative_scaled(const CharEquation& eq, const Real& z,
                                const PrecisionContext& ctx);

/// Independent oracle: determinant of the boundary matrix over the real
/// fundamental basis (common row factors z^j removed), by full-pivot
/// elimination. Proportional to F_n(z) with a z-independent constant.
/// Working precision carries the cancellation budget alpha_max*z/ln2.
Real det_direct(int n, const Real& z, const PrecisionContext& ctx);

enum class EquationFormat { kJson, kText };

/// Serializes the term list; deterministic ordering, JSON round-trips through
/// parse_equation. Throws InvalidInputError for unknown formats.
std::string emit_equation(const CharEquation& eq, EquationFormat format);
std::string emit_equation(const CharEquation& eq, const std::string& format);

/// Inverse of emit_equation(kJson).
CharEquation parse_equation(const std::string& json_text);

}  // namespace jnsvd
