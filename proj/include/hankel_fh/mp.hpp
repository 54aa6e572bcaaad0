#pragma once

// Thin value-semantic wrappers over MPFR. Every value carries its own
// precision; binary operations round to the larger operand precision. No
// global precision state is touched, so values built on different threads
// at different precisions never interact.

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

namespace hankel_fh::mp {

class HpReal {
 public:
  explicit HpReal(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  HpReal(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  HpReal(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }
  HpReal(const HpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  HpReal(HpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  HpReal& operator=(const HpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  HpReal& operator=(HpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HpReal() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return mpfr_zero_p(v_) ? 0 : mpfr_get_exp(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  std::string str(int digits = 30) const {
    char buf[64];
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    int len = mpfr_snprintf(buf, sizeof buf, fmt.c_str(), v_);
    if (len < static_cast<int>(sizeof buf)) return buf;
    std::string out(static_cast<std::size_t>(len) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), fmt.c_str(), v_);
    out.resize(static_cast<std::size_t>(len));
    return out;
  }

  HpReal& operator+=(const HpReal& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HpReal& operator-=(const HpReal& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HpReal& operator*=(const HpReal& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HpReal& operator/=(const HpReal& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HpReal& operator+=(double d) { mpfr_add_d(v_, v_, d, MPFR_RNDN); return *this; }
  HpReal& operator-=(double d) { mpfr_sub_d(v_, v_, d, MPFR_RNDN); return *this; }
  HpReal& operator*=(double d) { mpfr_mul_d(v_, v_, d, MPFR_RNDN); return *this; }
  HpReal& operator/=(double d) { mpfr_div_d(v_, v_, d, MPFR_RNDN); return *this; }
  HpReal& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }

  HpReal operator-() const { HpReal r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

  friend HpReal operator+(HpReal a, const HpReal& b) { return a += b; }
  friend HpReal operator-(HpReal a, const HpReal& b) { return a -= b; }
  friend HpReal operator*(HpReal a, const HpReal& b) { return a *= b; }
  friend HpReal operator/(HpReal a, const HpReal& b) { return a /= b; }
  friend HpReal operator+(HpReal a, double b) { return a += b; }
  friend HpReal operator-(HpReal a, double b) { return a -= b; }
  friend HpReal operator*(HpReal a, double b) { return a *= b; }
  friend HpReal operator/(HpReal a, double b) { return a /= b; }
  friend HpReal operator+(double a, HpReal b) { return b += a; }
  friend HpReal operator*(double a, HpReal b) { return b *= a; }
  friend HpReal operator-(double a, const HpReal& b) {
    HpReal r(b.prec());
    mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend HpReal operator/(double a, const HpReal& b) {
    HpReal r(b.prec());
    mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const HpReal& a, const HpReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const HpReal& a, const HpReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const HpReal& a, const HpReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const HpReal& a, const HpReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const HpReal& a, const HpReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const HpReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const HpReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }

  static HpReal pi(mpfr_prec_t bits) { HpReal r(bits); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static HpReal log2(mpfr_prec_t bits) { HpReal r(bits); mpfr_const_log2(r.v_, MPFR_RNDN); return r; }
  /// 2^e exactly.
  static HpReal pow2(long e, mpfr_prec_t bits) { HpReal r(bits); mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN); return r; }

 private:
  void widen(const HpReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }
  mpfr_t v_;
};

#define HANKEL_FH_MP_UNARY(name, fn)            \
  inline HpReal name(const HpReal& x) {         \
    HpReal r(x.prec());                         \
    fn(r.raw(), x.raw(), MPFR_RNDN);            \
    return r;                                   \
  }
HANKEL_FH_MP_UNARY(sqrt, mpfr_sqrt)
HANKEL_FH_MP_UNARY(exp, mpfr_exp)
HANKEL_FH_MP_UNARY(log, mpfr_log)
HANKEL_FH_MP_UNARY(log1p, mpfr_log1p)
HANKEL_FH_MP_UNARY(abs, mpfr_abs)
HANKEL_FH_MP_UNARY(sin, mpfr_sin)
HANKEL_FH_MP_UNARY(cos, mpfr_cos)
HANKEL_FH_MP_UNARY(lgamma_positive, mpfr_lngamma)
#undef HANKEL_FH_MP_UNARY

/// log Gamma(x) for x > 0 (MPFR's lngamma; sign is +1 there).
inline HpReal lgamma(const HpReal& x) { return lgamma_positive(x); }

inline HpReal atan2(const HpReal& y, const HpReal& x) {
  HpReal r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline HpReal pow(const HpReal& x, const HpReal& y) {
  HpReal r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

inline HpReal pow(const HpReal& x, long k) {
  HpReal r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

/// Complex number with HpReal parts.
struct HpComplex {
  HpReal re;
  HpReal im;

  explicit HpComplex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  HpComplex(HpReal r, HpReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit HpComplex(const HpReal& r) : re(r), im(r.prec()) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  HpComplex& operator+=(const HpComplex& o) { re += o.re; im += o.im; return *this; }
  HpComplex& operator-=(const HpComplex& o) { re -= o.re; im -= o.im; return *this; }
  HpComplex& operator*=(const HpComplex& o) {
    HpReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  HpComplex& operator*=(const HpReal& s) { re *= s; im *= s; return *this; }
  HpComplex& operator/=(const HpComplex& o) {
    // Smith's algorithm.
    if (abs(o.re) >= abs(o.im)) {
      HpReal q = o.im / o.re;
      HpReal den = o.re + o.im * q;
      HpReal r = (re + im * q) / den;
      im = (im - re * q) / den;
      re = std::move(r);
    } else {
      HpReal q = o.re / o.im;
      HpReal den = o.re * q + o.im;
      HpReal r = (re * q + im) / den;
      im = (im * q - re) / den;
      re = std::move(r);
    }
    return *this;
  }

  friend HpComplex operator+(HpComplex a, const HpComplex& b) { return a += b; }
  friend HpComplex operator-(HpComplex a, const HpComplex& b) { return a -= b; }
  friend HpComplex operator*(HpComplex a, const HpComplex& b) { return a *= b; }
  friend HpComplex operator*(HpComplex a, const HpReal& b) { return a *= b; }
  friend HpComplex operator/(HpComplex a, const HpComplex& b) { return a /= b; }
};

inline HpReal abs(const HpComplex& z) {
  HpReal r(z.prec());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

inline HpReal arg(const HpComplex& z) { return atan2(z.im, z.re); }

inline HpComplex exp(const HpComplex& z) {
  HpReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal branch.
inline HpComplex log(const HpComplex& z) { return {log(abs(z)), arg(z)}; }

}  // namespace hankel_fh::mp
