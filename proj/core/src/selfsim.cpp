#include "ampkit/selfsim.hpp"

#include <algorithm>
#include <stdexcept>

#include "ampkit/pade.hpp"

namespace ampkit::selfsim {

namespace {

// Expansion of the bare nest (A = 1) with parameters A_1..A_j (trailing
// parameters zero) through `order`, in the mapped variable.
PowerSeries nest_series(const std::vector<Real>& A, const Real& alpha,
                        const Real& s, std::size_t k, std::size_t order) {
  PowerSeries cur(order);
  cur[0] = 1;
  if (order >= 1 && !A.empty()) cur[1] = A[0];
  for (std::size_t j = 1; j <= k; ++j) {
    Real nj = j < k ? Real(j + 1) / Real(j) : (s - alpha) / Real(k);
    cur = series::pow(cur, nj, order);
    if (j < k && j + 1 <= order && j < A.size()) cur[j + 1] += A[j];
  }
  return cur;
}

}  // namespace

RootApproximant build_iterated_root(const PowerSeries& f, const Real& A,
                                    const Real& alpha, const Real& s,
                                    std::size_t k) {
  if (f.c.size() < k + 1)
    throw std::invalid_argument("iterated root: series shorter than order");
  if (s == alpha)
    throw std::domain_error("iterated root: outer exponent vanishes");
  RootApproximant r;
  r.A = A;
  r.alpha = alpha;
  r.s = s;
  r.k = k;
  for (std::size_t j = 1; j <= k; ++j) {
    // coefficient at order j is affine in A_j: probe at 0 and 1
    std::vector<Real> p0 = r.params, p1 = r.params;
    p0.push_back(Real(0));
    p1.push_back(Real(1));
    PowerSeries e0 = nest_series(p0, alpha, s, k, j);
    PowerSeries e1 = nest_series(p1, alpha, s, k, j);
    Real slope = e1[j] - e0[j];
    if (slope == 0)
      throw std::domain_error("iterated root: vanishing linear coefficient");
    r.params.push_back((f[j] - e0[j]) / slope);
  }
  return r;
}

PowerSeries root_to_series(const RootApproximant& r, std::size_t order) {
  return series::scale(nest_series(r.params, r.alpha, r.s, r.k, order), r.A);
}

Real root_amplitude(const RootApproximant& r) {
  // B = A ((...(A1^2+A2)^{3/2}+A3)^{4/3}+...+Ak)^{(s-alpha)/k}
  Real acc = r.params[0];
  for (std::size_t j = 2; j <= r.k; ++j) {
    if (acc < 0)
      throw std::domain_error("iterated root: negative base in amplitude");
    acc = pow(acc, Real(j) / Real(j - 1)) + r.params[j - 1];
  }
  if (acc < 0 && r.k > 1)
    throw std::domain_error("iterated root: negative base in amplitude");
  return r.A * pow(acc, (r.s - r.alpha) / Real(r.k));
}

Real eval_root(const RootApproximant& r, const Real& x) {
  Real acc = 1 + r.params[0] * x;
  for (std::size_t j = 1; j <= r.k; ++j) {
    Real nj = j < r.k ? Real(j + 1) / Real(j) : (r.s - r.alpha) / Real(r.k);
    if (acc <= 0) throw std::domain_error("iterated root: negative base");
    acc = pow(acc, nj);
    if (j < r.k) acc += r.params[j] * pow(x, static_cast<int>(j + 1));
  }
  Real pre = r.alpha == 0 ? r.A : r.A * pow(x, r.alpha);
  return pre * acc;
}

FactorApproximant build_factor_approximant(const PowerSeries& f, std::size_t M,
                                           const Real& s) {
  if (M != 1 && M != 2)
    throw std::invalid_argument("factor approximant: only M = 1, 2 supported");
  if (f.c.size() < 2 * M)
    throw std::invalid_argument("factor approximant: series too short");
  if (f[0] != 1)
    throw std::invalid_argument("factor approximant: series must start at 1");

  // Power sums p_n = sum c_i b_i^n from the log-series:
  // [x^n] ln f = (-1)^{n+1} p_n / n, and p_0 = sum c_i = s by constraint.
  PowerSeries lf = series::log(f.truncated(2 * M - 1));
  std::vector<Real> p(2 * M);
  p[0] = s;
  for (std::size_t n = 1; n < 2 * M; ++n)
    p[n] = (n % 2 == 1 ? Real(n) : Real(-static_cast<int>(n))) * lf[n];

  FactorApproximant fa;
  if (M == 1) {
    if (p[0] == 0) throw std::domain_error("factor approximant: degenerate");
    Real b = p[1] / p[0];
    fa.pairs.emplace_back(Cplx(b), Cplx(p[0]));
    return fa;
  }

  // Newton relations p_{2} = e1 p_1 - e2 p_0, p_3 = e1 p_2 - e2 p_1 give the
  // elementary symmetric functions of the b_i.
  std::vector<std::vector<Real>> a{{p[1], -p[0]}, {p[2], -p[1]}};
  std::vector<Real> rhs{p[2], p[3]};
  if (!pade::solve_dense(a, rhs))
    throw std::domain_error("factor approximant: degenerate Hankel system");
  Real e1 = rhs[0], e2 = rhs[1];

  // b_i are the roots of z^2 - e1 z + e2.
  Real disc = e1 * e1 - 4 * e2;
  Cplx b1, b2;
  if (disc >= 0) {
    Real sd = sqrt(disc);
    b1 = Cplx((e1 + sd) / 2);
    b2 = Cplx((e1 - sd) / 2);
  } else {
    Real sd = sqrt(-disc);
    b1 = Cplx(e1 / 2, sd / 2);
    b2 = b1.conj();
  }
  if (abs(b1 - b2) == 0)
    throw std::domain_error("factor approximant: coincident factors");

  // c_i from the Vandermonde rows c1 + c2 = p0, c1 b1 + c2 b2 = p1.
  Cplx c1 = (Cplx(p[1]) - b2 * Cplx(p[0])) / (b1 - b2);
  Cplx c2 = Cplx(p[0]) - c1;

  std::vector<std::pair<Cplx, Cplx>> pairs{{b1, c1}, {b2, c2}};
  std::sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r) {
    Real ml = l.first.abs2(), mr = r.first.abs2();
    if (ml != mr) return ml < mr;
    return atan2(l.first.im, l.first.re) < atan2(r.first.im, r.first.re);
  });
  fa.pairs = std::move(pairs);
  return fa;
}

Real eval_factor(const FactorApproximant& fa, const Real& x) {
  Cplx prod(Real(1));
  for (const auto& [b, c] : fa.pairs) {
    Cplx base = Cplx(Real(1)) + b * Cplx(x);
    if (base.im == 0 && base.re <= 0)
      throw std::domain_error("factor approximant: branch cut hit");
    prod = prod * pow(base, c);
  }
  return fa.prefactor * prod.re;
}

PowerSeries factor_to_series(const FactorApproximant& fa, std::size_t order) {
  // ln f* = sum c_i ln(1 + b_i x); conjugate pairs make the coefficients
  // real, so project and exponentiate as a real series.
  PowerSeries lf(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Cplx s(Real(0));
    Cplx sign(Real(n % 2 == 1 ? 1 : -1));
    for (const auto& [b, c] : fa.pairs) {
      Cplx bn(Real(1));
      for (std::size_t i = 0; i < n; ++i) bn = bn * b;
      s = s + c * bn;
    }
    lf[n] = (sign * s).re / Real(static_cast<int>(n));
  }
  return series::scale(series::exp(lf), fa.prefactor);
}

Real factor_amplitude(const FactorApproximant& fa) {
  Cplx prod(Real(1));
  for (const auto& [b, c] : fa.pairs) prod = prod * pow(b, c);
  return fa.prefactor * prod.re;
}

Real eval_shifted_root(const ShiftedRoot& sr, const Real& t) {
  Real base = 1 + sr.v4 * t;
  if (base <= 0) throw std::domain_error("shifted root: base not positive");
  return sr.v2 + sr.v3 * pow(base, -sr.c);
}

PowerSeries shifted_root_to_series(const ShiftedRoot& sr, std::size_t order) {
  PowerSeries out(order);
  out[0] = sr.v2 + sr.v3;
  Real binom(1);  // running binomial coefficient of (1+u)^{-c}
  for (std::size_t n = 1; n <= order; ++n) {
    binom *= (-sr.c - Real(static_cast<int>(n) - 1)) / Real(static_cast<int>(n));
    out[n] = sr.v3 * binom * pow(sr.v4, static_cast<int>(n));
  }
  return out;
}

}  // namespace ampkit::selfsim
