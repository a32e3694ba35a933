#include "jnsvd/char_equation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

#include "jnsvd/unity.hpp"

namespace jnsvd {

namespace {

// Extra working bits for elimination-based paths: the spec's cancellation
// budget alpha_max*z/ln2 plus fixed guard bits.
unsigned cancellation_budget_bits(const Real& alpha_max, const Real& z) {
  double b = (alpha_max.to_double() * std::max(z.to_double(), 0.0)) / 0.6931471805599453;
  if (b < 0 || !std::isfinite(b)) b = 0;
  return static_cast<unsigned>(b) + 64;
}

}  // namespace

CharEquation build_char_equation(int n, const PrecisionContext& ctx) {
  const PrecisionContext work = ctx.raised(64);
  std::vector<SubsetOrbit> orbits = enumerate_orbits(n, work);

  // Raw complex coefficients orbit_size * c_I, merged by (alpha, beta).
  struct RawTerm {
    Real alpha, beta;
    Complex coeff;
  };
  std::vector<RawTerm> raw;
  const Real merge_tol = Real::pow2(-static_cast<long>(work.bits()) / 2, work.bits());
  for (SubsetOrbit& o : orbits) {
    Complex contrib = Real::from(static_cast<long>(o.orbit_size), work.bits()) * o.c;
    bool merged = false;
    for (RawTerm& t : raw) {
      if (abs(t.alpha - o.alpha) <= merge_tol && abs(t.beta - o.beta) <= merge_tol) {
        t.coeff = t.coeff + contrib;
        merged = true;
        break;
      }
    }
    if (!merged) raw.push_back({std::move(o.alpha), std::move(o.beta), std::move(contrib)});
  }

  std::sort(raw.begin(), raw.end(), [](const RawTerm& a, const RawTerm& b) {
    if (a.alpha != b.alpha) return a.alpha > b.alpha;
    return a.beta < b.beta;
  });
  if (raw.size() > 1 && !(raw[0].alpha > raw[1].alpha + merge_tol))
    throw NonConvergenceError("build_char_equation: maximal-alpha term not unique");

  // Divide out the dominant complex coefficient: all remaining coefficients
  // must come out real (the common phase of the c_I cancels).
  Complex dominant = raw.front().coeff;
  CharEquation eq;
  eq.n = n;
  eq.scale_convention = "max-alpha-unit";
  eq.built_bits = ctx.bits();
  for (RawTerm& t : raw) {
    Complex c = t.coeff / dominant;
    if (abs(c.im) > merge_tol * (abs(c.re) + 1L))
      throw NonConvergenceError("build_char_equation: non-real normalized coefficient");
    if (abs(c.re) <= merge_tol) continue;  // exact cancellation across orbits
    eq.terms.push_back({c.re.round_to(ctx.bits()), t.alpha.round_to(ctx.bits()),
                        t.beta.round_to(ctx.bits())});
  }
  return eq;
}

namespace {

struct ScaledParts {
  // Per term: ch = (e^{(a-amax)z} + e^{-(a+amax)z})/2 and
  //           sh = (e^{(a-amax)z} - e^{-(a+amax)z})/2, both <= 1 for z >= 0.
  std::vector<Real> ch, sh, cosb, sinb;
};

ScaledParts scaled_parts(const CharEquation& eq, const Real& z, unsigned bits) {
  ScaledParts p;
  const Real zw = z.round_to(bits);
  const Real amax = eq.alpha_max().round_to(bits);
  p.ch.reserve(eq.terms.size());
  p.sh.reserve(eq.terms.size());
  p.cosb.reserve(eq.terms.size());
  p.sinb.reserve(eq.terms.size());
  for (const CoshCosTerm& t : eq.terms) {
    Real a = t.alpha.round_to(bits);
    Real ep = exp((a - amax) * zw);
    Real em = exp(-(a + amax) * zw);
    p.ch.push_back((ep + em) / 2L);
    p.sh.push_back((ep - em) / 2L);
    Real s(bits), c(bits);
    sin_cos(s, c, t.beta.round_to(bits) * zw);
    p.cosb.push_back(std::move(c));
    p.sinb.push_back(std::move(s));
  }
  return p;
}

unsigned eval_guard_bits(const CharEquation& eq) {
  double mass = 1;
  for (const CoshCosTerm& t : eq.terms) mass += std::fabs(t.coeff.to_double());
  return 64 + static_cast<unsigned>(std::log2(mass) + 1);
}

}  // namespace

Real evaluate_scaled(const CharEquation& eq, const Real& z, const PrecisionContext& ctx) {
  if (z < 0L) throw InvalidInputError("evaluate_scaled: z must be >= 0");
  const unsigned bits = ctx.bits() + eval_guard_bits(eq);
  ScaledParts p = scaled_parts(eq, z, bits);
  Real acc = Real::from(0L, bits);
  for (size_t i = 0; i < eq.terms.size(); ++i)
    acc += eq.terms[i].coeff.round_to(bits) * p.ch[i] * p.cosb[i];
  return acc.round_to(ctx.bits());
}

Real evaluate_derivative_scaled(const CharEquation& eq, const Real& z,
                                const PrecisionContext& ctx) {
  if (z < 0L) throw InvalidInputError("evaluate_derivative_scaled: z must be >= 0");
  const unsigned bits = ctx.bits() + eval_guard_bits(eq);
  ScaledParts p = scaled_parts(eq, z, bits);
  const Real amax = eq.alpha_max().round_to(bits);
  // d/dz [e^{-amax z} F] = e^{-amax z} (F' - amax F), assembled term-wise from
  // the already-scaled cosh/sinh parts.
  Real acc = Real::from(0L, bits);
  for (size_t i = 0; i < eq.terms.size(); ++i) {
    const Real coeff = eq.terms[i].coeff.round_to(bits);
    const Real a = eq.terms[i].alpha.round_to(bits);
    const Real b = eq.terms[i].beta.round_to(bits);
    acc += coeff * (a * p.sh[i] * p.cosb[i] - b * p.ch[i] * p.sinb[i] -
                    amax * p.ch[i] * p.cosb[i]);
  }
  return acc.round_to(ctx.bits());
}

namespace {

// Columns of the boundary matrix over the real fundamental basis. A column is
// either a pure exponential e^{r z t} (r = +-1 in unit-omega scale) or one
// member of a pair e^{a z t} cos(b z t) / e^{a z t} sin(b z t) with
// a + i b = omega_k. Row j holds the j-th derivative over z^j, evaluated at
// t = 1 for j < n and t = 0 for j >= n.
struct BasisColumn {
  bool pure_exp;
  Real rate;    // pure exponential: +-1
  Real a, b;    // pair: unit components of omega_k
  Real p, q;    // current derivative state: p*[cos part] + q*[sin part]
};

std::vector<std::vector<Real>> boundary_matrix_unit(int n, const Real& z,
                                                    unsigned bits) {
  PrecisionContext work(bits);
  const Real zw = z.round_to(bits);
  std::vector<BasisColumn> cols;
  cols.reserve(2 * n);
  auto push_exp = [&](long r) {
    BasisColumn c{true, work.real(r), work.zero(), work.zero(), work.one(), work.zero()};
    cols.push_back(std::move(c));
  };
  auto push_pair = [&](int k) {
    Complex w = omega(n, k).value(work);
    BasisColumn s{false, work.zero(), w.re, w.im, work.zero(), work.one()};
    BasisColumn c{false, work.zero(), w.re, w.im, work.one(), work.zero()};
    cols.push_back(std::move(s));
    cols.push_back(std::move(c));
  };
  if (n % 2 == 0) {
    push_exp(1);
    push_exp(-1);
    for (int k = 1; k < n; ++k) push_pair(k);
  } else {
    for (int k = 0; k < n; ++k) push_pair(k);
  }

  std::vector<std::vector<Real>> mat(2 * n, std::vector<Real>(2 * n, work.zero()));
  for (int ci = 0; ci < 2 * n; ++ci) {
    BasisColumn& col = cols[ci];
    Real eaz(bits), cbz(bits), sbz(bits);
    if (col.pure_exp) {
      eaz = exp(col.rate * zw);
    } else {
      eaz = exp(col.a * zw);
      sin_cos(sbz, cbz, col.b * zw);
    }
    for (int j = 0; j < 2 * n; ++j) {
      if (j > 0) {
        if (col.pure_exp) {
          col.p = col.p * col.rate;
        } else {
          Real np = col.a * col.p + col.b * col.q;
          Real nq = col.a * col.q - col.b * col.p;
          col.p = std::move(np);
          col.q = std::move(nq);
        }
      }
      if (j < n)
        mat[j][ci] = col.pure_exp ? col.p * eaz : eaz * (col.p * cbz + col.q * sbz);
      else
        mat[j][ci] = col.p;
    }
  }
  return mat;
}

}  // namespace

Real det_direct(int n, const Real& z, const PrecisionContext& ctx) {
  if (n < 1) throw InvalidInputError("det_direct: n must be >= 1");
  if (!(z > 0L)) throw InvalidInputError("det_direct: z must be positive");
  PrecisionContext amax_ctx(ctx.bits());
  const Real amax = dominant_alpha(n, amax_ctx);
  const unsigned bits = ctx.bits() + cancellation_budget_bits(amax, z);

  std::vector<std::vector<Real>> a = boundary_matrix_unit(n, z, bits);
  const int m = 2 * n;
  // Full-pivot elimination; det = sign * product of pivots.
  int sign = 1;
  Real det = Real::from(1L, bits);
  for (int step = 0; step < m; ++step) {
    int pr = step, pc = step;
    Real best = abs(a[step][step]);
    for (int r = step; r < m; ++r)
      for (int c = step; c < m; ++c)
        if (abs(a[r][c]) > best) {
          best = abs(a[r][c]);
          pr = r;
          pc = c;
        }
    if (pr != step) {
      std::swap(a[pr], a[step]);
      sign = -sign;
    }
    if (pc != step) {
      for (int r = 0; r < m; ++r) std::swap(a[r][pc], a[r][step]);
      sign = -sign;
    }
    if (a[step][step].is_zero()) return ctx.zero();
    det *= a[step][step];
    for (int r = step + 1; r < m; ++r) {
      Real factor = a[r][step] / a[step][step];
      for (int c = step; c < m; ++c) a[r][c] -= factor * a[step][c];
    }
  }
  if (sign < 0) det = -det;
  return det.round_to(ctx.bits());
}

std::string emit_equation(const CharEquation& eq, EquationFormat format) {
  const int digits = PrecisionContext(eq.built_bits ? eq.built_bits : 64).decimal_digits();
  if (format == EquationFormat::kJson) {
    nlohmann::ordered_json j;
    j["n"] = eq.n;
    j["variable"] = "z = lambda^(-1/(2n))";
    j["terms"] = nlohmann::ordered_json::array();
    for (const CoshCosTerm& t : eq.terms) {
      j["terms"].push_back({{"coeff", t.coeff.to_string(digits)},
                            {"alpha", t.alpha.to_string(digits)},
                            {"beta", t.beta.to_string(digits)}});
    }
    return j.dump(2);
  }
  // Text form, e.g. "cosh(z)*cos(z) + 1 = 0".
  std::string out;
  for (size_t i = 0; i < eq.terms.size(); ++i) {
    const CoshCosTerm& t = eq.terms[i];
    Real c = t.coeff;
    if (i > 0) {
      out += (c < 0L) ? " - " : " + ";
      if (c < 0L) c = -c;
    } else if (c < 0L) {
      out += "-";
      c = -c;
    }
    std::vector<std::string> factors;
    if (!(c == 1L) || (t.alpha.is_zero() && t.beta.is_zero()))
      factors.push_back(c.to_string(12));
    auto arg = [&](const Real& x) {
      return (x == 1L) ? std::string("z") : x.to_string(12) + "*z";
    };
    if (!t.alpha.is_zero()) factors.push_back("cosh(" + arg(t.alpha) + ")");
    if (!t.beta.is_zero()) factors.push_back("cos(" + arg(t.beta) + ")");
    for (size_t k = 0; k < factors.size(); ++k) {
      if (k) out += "*";
      out += factors[k];
    }
  }
  out += " = 0";
  return out;
}

std::string emit_equation(const CharEquation& eq, const std::string& format) {
  if (format == "json") return emit_equation(eq, EquationFormat::kJson);
  if (format == "text") return emit_equation(eq, EquationFormat::kText);
  throw InvalidInputError("emit_equation: unknown format \"" + format + "\"");
}

CharEquation parse_equation(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  CharEquation eq;
  eq.n = j.at("n").get<int>();
  eq.scale_convention = "max-alpha-unit";
  // Digits were chosen from built_bits at emit time; recover enough precision
  // to hold every printed digit.
  size_t max_len = 16;
  for (const auto& t : j.at("terms"))
    max_len = std::max(max_len, t.at("coeff").get<std::string>().size());
  eq.built_bits = static_cast<unsigned>(static_cast<double>(max_len + 8) / 0.301) + 16;
  for (const auto& t : j.at("terms"))
    eq.terms.push_back({Real::from(t.at("coeff").get<std::string>(), eq.built_bits),
                        Real::from(t.at("alpha").get<std::string>(), eq.built_bits),
                        Real::from(t.at("beta").get<std::string>(), eq.built_bits)});
  return eq;
}

}  // namespace jnsvd
