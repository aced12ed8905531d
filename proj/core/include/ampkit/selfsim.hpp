#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ampkit/series.hpp"

namespace ampkit::selfsim {

using series::PowerSeries;

// Iterated root  A x^alpha ((...((1+A1 x)^{n1} + A2 x^2)^{n2} + ...) + Ak x^k)^{nk}
// with interior exponents n_j = (j+1)/j and outer exponent (s-alpha)/k, so the
// whole expression behaves like B x^s at large x.  Everything here lives in
// the mapped expansion variable (for even series the caller maps z = x^2 and
// adjusts exponents before building).
struct RootApproximant {
  Real A{1};
  Real alpha{0};
  Real s{0};
  std::size_t k = 0;
  std::vector<Real> params;  // A_1..A_k
};

// Sequential accuracy-through-order fit: f must be normalized to f[0] == 1
// (prefactor A x^alpha factored out by the caller) and known through order k.
// Each A_j enters its own order affinely, so every step is a scalar linear
// solve.  Throws std::invalid_argument on too-short input and
// std::domain_error when the outer exponent vanishes (s == alpha).
RootApproximant build_iterated_root(const PowerSeries& f, const Real& A,
                                    const Real& alpha, const Real& s,
                                    std::size_t k);

// Expansion of the nest (including the prefactor A, excluding x^alpha) in the
// mapped variable; the first k coefficients reproduce the source series.
PowerSeries root_to_series(const RootApproximant& r, std::size_t order);

// Large-variable amplitude B = A ((...(A1^2+A2)^{3/2}+A3)^{4/3}+...+Ak)^{(s-alpha)/k}.
// Throws std::domain_error when an inner nest goes negative under a
// fractional power (the chosen order is unusable as a control function).
Real root_amplitude(const RootApproximant& r);

// Pointwise value A x^alpha * nest(x); nested bases must stay positive.
Real eval_root(const RootApproximant& r, const Real& x);

// Product prefactor * prod_i (1 + b_i x)^{c_i}; the (b_i, c_i) may come in
// complex-conjugate pairs, in which case the value on the real axis is real.
struct FactorApproximant {
  std::vector<std::pair<Cplx, Cplx>> pairs;  // (b_i, c_i)
  Real prefactor{1};
};

// Accuracy-through-order construction from f (f[0] == 1, order >= 2M-1) with
// the exponent-sum constraint  sum c_i = s.  The b_i are recovered as roots
// of the Prony/Hankel polynomial built from the power sums of the log-series,
// the c_i by the trailing Vandermonde solve; b_i are ordered by modulus then
// argument so the result is deterministic.  Only M = 1 and M = 2 are needed
// (and implemented) here.  Throws std::domain_error on a degenerate Hankel
// system or a non-conjugate complex solution.
FactorApproximant build_factor_approximant(const PowerSeries& f, std::size_t M,
                                           const Real& s);

Real eval_factor(const FactorApproximant& fa, const Real& x);

PowerSeries factor_to_series(const FactorApproximant& fa, std::size_t order);

// Coefficient of x^s at large x: prefactor * prod b_i^{c_i} (real by pairing).
Real factor_amplitude(const FactorApproximant& fa);

// K(t) = v2 + v3 (1 + v4 t)^{-c}: a fixed-form interpolation between
// K(0) = v2 + v3 and K(inf) = v2.
struct ShiftedRoot {
  Real v2, v3, v4, c;
};

Real eval_shifted_root(const ShiftedRoot& sr, const Real& t);

PowerSeries shifted_root_to_series(const ShiftedRoot& sr, std::size_t order);

}  // namespace ampkit::selfsim
