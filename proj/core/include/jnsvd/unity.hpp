#pragma once

#include <vector>

#include "jnsvd/precision.hpp"

namespace jnsvd {

/// One of the 2n rotated roots of unity omega_k = exp(i pi (2k + n mod 2)/(2n)).
/// The angle is kept as the exact integer numerator over 2n; trigonometric
/// evaluation is deferred to the requested precision.
struct UnityRoot {
  int n = 0;
  int k = 0;
  long angle_numerator = 0;  // 2k + (n mod 2); angle = pi * numerator / (2n)

  Complex value(const PrecisionContext& ctx) const;
};

/// Throws InvalidInputError unless 0 <= k <= 2n-1.
UnityRoot omega(int n, int k);

/// The 2n zeros nu_k = lambda^(-1/(2n)) omega_k of the characteristic
/// polynomial; requires lambda > 0.
std::vector<Complex> nu_roots(int n, const Real& lambda, const PrecisionContext& ctx);

/// Vandermonde-product coefficient c_I of the monomial prod_{k in I} z_k in
/// det(M_n); requires |I| = n with indices in 0..2n-1.
Complex subset_coefficient(int n, const std::vector<int>& index_set,
                           const PrecisionContext& ctx);

/// Equivalence class of a size-n index set under reflection and complement.
struct SubsetOrbit {
  std::vector<int> representative;  // beta >= 0, then alpha >= 0, then lex smallest
  Real alpha;                       // Re sum of omegas over the representative
  Real beta;                        // Im sum
  Complex c;                        // common coefficient of all orbit members
  int orbit_size = 0;               // 2 or 4
};

/// Partitions all C(2n,n) index sets into orbits {I, reflected(I), C, reflected(C)}.
/// Capped at n <= 12.
std::vector<SubsetOrbit> enumerate_orbits(int n, const PrecisionContext& ctx);

/// cot(pi/(2n)): the largest alpha over all orbits, i.e. the growth rate of
/// the dominant cosh factor.
Real dominant_alpha(int n, const PrecisionContext& ctx);

/// Brute-force max of Re sum over all size-n subsets (cross-check for
/// dominant_alpha; same enumeration cap).
Real dominant_alpha_brute_force(int n, const PrecisionContext& ctx);

/// Reflection across the real axis: {2n - (n mod 2) - k mod 2n : k in I}, sorted.
std::vector<int> reflect_index_set(int n, const std::vector<int>& index_set);

/// Sorted complement of I in {0,...,2n-1}.
std::vector<int> complement_index_set(int n, const std::vector<int>& index_set);

}  // namespace jnsvd
