#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace jnsvd {

/// Arbitrary-precision real number with value semantics over mpfr_t.
/// The precision of an arithmetic result is the widest operand precision;
/// all roundings are to nearest. Mixed operations with machine integers
/// and doubles adopt the Real operand's precision (the machine value is
/// converted exactly).
class Real {
 public:
  Real() { mpfr_init2(v_, kMinPrec); mpfr_set_zero(v_, 1); }

  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  static Real from(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

  static Real from(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }

  static Real from(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("Real: cannot parse \"" + s + "\"");
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  /// Value rounded to a (usually different) precision.
  Real round_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Deterministic decimal rendering with the given count of significant
  /// digits, scientific form. Round-trips through from() at equal precision.
  std::string to_string(int digits) const {
    if (digits < 2) digits = 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*RNe", digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  // --- arithmetic ---

  friend Real operator+(const Real& a, const Real& b) {
    Real r(widest(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(widest(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(widest(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(widest(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

  friend Real operator*(const Real& a, double b) { Real r(a.prec()); mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator*(double a, const Real& b) { return b * a; }

  // --- comparisons (total order on non-NaN values) ---

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  // --- elementary functions ---

  friend Real abs(const Real& a) { Real r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real exp(const Real& a) { Real r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real log(const Real& a) { Real r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sin(const Real& a) { Real r(a.prec()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real cos(const Real& a) { Real r(a.prec()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real tan(const Real& a) { Real r(a.prec()); mpfr_tan(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sinh(const Real& a) { Real r(a.prec()); mpfr_sinh(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real cosh(const Real& a) { Real r(a.prec()); mpfr_cosh(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real atan(const Real& a) { Real r(a.prec()); mpfr_atan(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real floor(const Real& a) { Real r(a.prec()); mpfr_floor(r.v_, a.v_); return r; }

  friend void sin_cos(Real& s, Real& c, const Real& a) {
    Real ts(a.prec()), tc(a.prec());
    mpfr_sin_cos(ts.v_, tc.v_, a.v_, MPFR_RNDN);
    s = std::move(ts);
    c = std::move(tc);
  }
  friend void sinh_cosh(Real& s, Real& c, const Real& a) {
    Real ts(a.prec()), tc(a.prec());
    mpfr_sinh_cosh(ts.v_, tc.v_, a.v_, MPFR_RNDN);
    s = std::move(ts);
    c = std::move(tc);
  }

  friend Real pown(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  /// a * 2^e, exact.
  friend Real ldexp2(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend const Real& min(const Real& a, const Real& b) { return a <= b ? a : b; }
  friend const Real& max(const Real& a, const Real& b) { return a >= b ? a : b; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  static constexpr mpfr_prec_t kMinPrec = 64;
  static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
  static mpfr_prec_t widest(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
  }

  mpfr_t v_;
};

/// Complex number over Real, used for roots of unity and the Vandermonde
/// coefficient products.
struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  Real abs() const { return sqrt(re * re + im * im); }

  /// Integer power, exponent of either sign.
  Complex pow(long e, mpfr_prec_t prec) const {
    Complex acc{Real::from(1L, prec), Real::from(0L, prec)};
    Complex base = *this;
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    if (inv) {
      Complex one{Real::from(1L, prec), Real::from(0L, prec)};
      acc = one / acc;
    }
    return acc;
  }
};

}  // namespace jnsvd
