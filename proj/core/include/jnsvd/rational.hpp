#pragma once

#include <gmp.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "jnsvd/real.hpp"

namespace jnsvd {

/// Exact rational number (GMP mpq, always canonical).
class Rational {
 public:
  Rational() { mpq_init(v_); }

  Rational(long num) {  // NOLINT: implicit by design, mirrors integer literals
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
  }

  Rational(long num, unsigned long den) {
    mpq_init(v_);
    mpq_set_si(v_, num, den);
    mpq_canonicalize(v_);
  }

  explicit Rational(const std::string& s) {
    mpq_init(v_);
    if (mpq_set_str(v_, s.c_str(), 10) != 0) {
      mpq_clear(v_);
      throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
    mpq_canonicalize(v_);
  }

  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (mpq_sgn(b.v_) == 0) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }

  /// Canonical "p/q" (or plain "p" when q = 1).
  std::string to_string() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  Real to_real(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set_q(r.raw(), v_, MPFR_RNDN);
    return r;
  }

 private:
  mpq_t v_;
};

}  // namespace jnsvd
