#include "jnsvd/unity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace jnsvd {

Complex UnityRoot::value(const PrecisionContext& ctx) const {
  Real angle = ctx.pi() * angle_numerator / (2L * n);
  Real s(ctx.bits()), c(ctx.bits());
  sin_cos(s, c, angle);
  return {std::move(c), std::move(s)};
}

UnityRoot omega(int n, int k) {
  if (n < 1) throw InvalidInputError("omega: n must be >= 1");
  if (k < 0 || k > 2 * n - 1)
    throw InvalidInputError("omega: k out of range 0..2n-1");
  return UnityRoot{n, k, 2L * k + (n % 2)};
}

std::vector<Complex> nu_roots(int n, const Real& lambda, const PrecisionContext& ctx) {
  if (!(lambda > 0L)) throw InvalidInputError("nu_roots: lambda must be positive");
  // lambda^(-1/(2n))
  Real radius = exp(log(lambda.round_to(ctx.bits())) / (-2L * n));
  std::vector<Complex> roots;
  roots.reserve(2 * n);
  for (int k = 0; k < 2 * n; ++k) {
    Complex w = omega(n, k).value(ctx);
    roots.push_back({radius * w.re, radius * w.im});
  }
  return roots;
}

Complex subset_coefficient(int n, const std::vector<int>& index_set,
                           const PrecisionContext& ctx) {
  if (static_cast<int>(index_set.size()) != n)
    throw InvalidInputError("subset_coefficient: |I| must equal n");
  std::vector<Complex> w;
  w.reserve(2 * n);
  for (int k = 0; k < 2 * n; ++k) w.push_back(omega(n, k).value(ctx));

  std::vector<int> comp = complement_index_set(n, index_set);
  Complex prod{ctx.one(), ctx.zero()};
  auto vandermonde = [&](const std::vector<int>& idx) {
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        prod = prod * (w[idx[b]] - w[idx[a]]);
  };
  vandermonde(index_set);
  vandermonde(comp);

  // prefactor (-1)^{n(n+1)/2} * i^{n (n mod 2)}
  long sign_exp = (static_cast<long>(n) * (n + 1) / 2) % 2;
  if (sign_exp) prod = -prod;
  if (n % 2) {
    int q = n % 4;  // i^n for odd n: q is 1 or 3
    if (q == 1)
      prod = Complex{-prod.im, prod.re};  // multiply by i
    else
      prod = Complex{prod.im, -prod.re};  // multiply by -i
  }
  return prod;
}

std::vector<int> reflect_index_set(int n, const std::vector<int>& index_set) {
  std::vector<int> out;
  out.reserve(index_set.size());
  for (int k : index_set) out.push_back((2 * n - (n % 2) - k) % (2 * n) < 0
                                            ? (2 * n - (n % 2) - k) % (2 * n) + 2 * n
                                            : (2 * n - (n % 2) - k) % (2 * n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complement_index_set(int n, const std::vector<int>& index_set) {
  std::vector<bool> in(2 * n, false);
  for (int k : index_set) in[k] = true;
  std::vector<int> out;
  out.reserve(2 * n - index_set.size());
  for (int k = 0; k < 2 * n; ++k)
    if (!in[k]) out.push_back(k);
  return out;
}

namespace {

constexpr int kEnumerationCap = 12;

// Sum of omega_k over an index set, at ctx precision.
Complex subset_sum(int n, const std::vector<int>& idx, const std::vector<Complex>& w,
                   const PrecisionContext& ctx) {
  Complex s{ctx.zero(), ctx.zero()};
  for (int k : idx) s = s + w[k];
  return s;
}

}  // namespace

std::vector<SubsetOrbit> enumerate_orbits(int n, const PrecisionContext& ctx) {
  if (n < 1) throw InvalidInputError("enumerate_orbits: n must be >= 1");
  if (n > kEnumerationCap)
    throw InvalidInputError("enumerate_orbits: n exceeds the enumeration cap of 12");

  std::vector<Complex> w;
  w.reserve(2 * n);
  for (int k = 0; k < 2 * n; ++k) w.push_back(omega(n, k).value(ctx));

  const Real tol = Real::pow2(-static_cast<long>(ctx.bits()) / 2, ctx.bits());

  std::set<std::vector<int>> seen;
  std::vector<SubsetOrbit> orbits;

  // Lexicographic walk over all size-n subsets of {0,...,2n-1}.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    if (!seen.count(idx)) {
      std::vector<int> refl = reflect_index_set(n, idx);
      std::vector<int> comp = complement_index_set(n, idx);
      std::vector<int> comp_refl = reflect_index_set(n, comp);
      std::set<std::vector<int>> orbit{idx, refl, comp, comp_refl};
      for (const auto& member : orbit) seen.insert(member);

      // Representative: beta >= 0, then alpha >= 0, then lex smallest.
      const std::vector<int>* rep = nullptr;
      Real rep_alpha = ctx.zero(), rep_beta = ctx.zero();
      for (const auto& member : orbit) {
        Complex s = subset_sum(n, member, w, ctx);
        if (s.im < -tol) continue;
        if (s.re < -tol) continue;
        if (rep == nullptr || member < *rep) {
          rep = &member;
          rep_alpha = s.re;
          rep_beta = s.im;
        }
      }
      if (rep_alpha < 0L) rep_alpha = ctx.zero();  // clear -0-sized noise
      if (rep_beta < 0L) rep_beta = ctx.zero();

      SubsetOrbit o;
      o.representative = *rep;
      o.alpha = std::move(rep_alpha);
      o.beta = std::move(rep_beta);
      o.c = subset_coefficient(n, o.representative, ctx);
      o.orbit_size = static_cast<int>(orbit.size());
      orbits.push_back(std::move(o));
    }
    // next subset in lex order
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == 2 * n - n + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return orbits;
}

Real dominant_alpha(int n, const PrecisionContext& ctx) {
  if (n < 1) throw InvalidInputError("dominant_alpha: n must be >= 1");
  Real angle = ctx.pi() / (2L * n);
  Real s(ctx.bits()), c(ctx.bits());
  sin_cos(s, c, angle);
  return c / s;  // cot(pi/(2n)); zero at n = 1
}

Real dominant_alpha_brute_force(int n, const PrecisionContext& ctx) {
  Real best = ctx.real(-1000L);
  for (const SubsetOrbit& o : enumerate_orbits(n, ctx))
    if (o.alpha > best) best = o.alpha;
  return best;
}

}  // namespace jnsvd
