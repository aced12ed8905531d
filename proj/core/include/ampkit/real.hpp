#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace ampkit {

// Arbitrary-precision real with runtime-selectable precision.  All pipeline
// entry points set the working precision explicitly; 60 decimal digits is the
// resting default.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 60;

inline unsigned working_digits() { return Real::default_precision(); }

inline void set_working_digits(unsigned digits) {
  Real::default_precision(digits);
}

// RAII guard so helpers can bump precision without leaking it to callers.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Precision policy: enough digits that an order-n Pade fit keeps ~10 digits of
// headroom (see the Toeplitz conditioning notes in the tests).
inline unsigned digits_for_order(unsigned pade_order) {
  unsigned need = 10 + 4 * pade_order;
  return need > kDefaultDigits ? need : kDefaultDigits;
}

// Minimal complex-over-Real.  mpc is not available here and std::complex is
// only specified for the builtin floating types, so we roll the few operations
// the factor approximants need.
struct Cplx {
  Real re{0}, im{0};

  Cplx() = default;
  Cplx(Real r) : re(std::move(r)) {}  // NOLINT: implicit by design
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Cplx operator+(const Cplx& a, const Cplx& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Cplx operator-(const Cplx& a, const Cplx& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Cplx conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
};

inline Real abs(const Cplx& z) { return sqrt(z.abs2()); }

inline Cplx log(const Cplx& z) {
  return {log(z.abs2()) / 2, atan2(z.im, z.re)};
}

inline Cplx exp(const Cplx& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

inline Cplx pow(const Cplx& base, const Cplx& e) {
  return exp(e * log(base));
}

inline Cplx sqrt(const Cplx& z) {
  Real m = sqrt(abs(z));
  Real a = atan2(z.im, z.re) / 2;
  return {m * cos(a), m * sin(a)};
}

}  // namespace ampkit
