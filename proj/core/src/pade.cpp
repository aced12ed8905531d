#include "ampkit/pade.hpp"

#include <cmath>

namespace ampkit::pade {

bool solve_dense(std::vector<std::vector<Real>>& a, std::vector<Real>& b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0) return false;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      Real f = a[r][col] / a[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    Real s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * b[k];
    b[i] = s / a[i][i];
  }
  return true;
}

PadeApproximant fit(const PowerSeries& c, std::size_t n, std::size_t m) {
  PadeApproximant p;
  p.n = n;
  p.m = m;
  if (c.c.size() < n + m + 1) return p;
  auto C = [&](std::size_t k) -> Real {
    return k < c.c.size() ? c[k] : Real(0);
  };

  std::vector<Real> den{Real(1)};
  if (m > 0) {
    // Toeplitz system: sum_j q_j c_{n+i-j} = -c_{n+i}, i = 1..m.
    std::vector<std::vector<Real>> a(m, std::vector<Real>(m, Real(0)));
    std::vector<Real> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        // index n + i - j with j offset by 1 (q_1..q_m)
        long idx = static_cast<long>(n) + static_cast<long>(i) -
                   static_cast<long>(j);
        a[i][j] = idx >= 0 ? C(static_cast<std::size_t>(idx)) : Real(0);
      }
      b[i] = -C(n + 1 + i);
    }
    if (!solve_dense(a, b)) return p;
    den.insert(den.end(), b.begin(), b.end());
  }

  std::vector<Real> num(n + 1, Real(0));
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t j = 0; j <= std::min(k, m); ++j)
      num[k] += C(k - j) * den[j];

  // Accuracy-through-order check: the fit can go through the LU without a
  // hard zero pivot yet still miss coefficients (block structure).
  PowerSeries nn{std::vector<Real>(num)}, dd{std::vector<Real>(den)};
  PowerSeries re = series::div(nn.extended(n + m), dd.extended(n + m));
  Real scale(0);
  for (std::size_t k = 0; k <= n + m; ++k)
    if (abs(C(k)) > scale) scale = abs(C(k));
  if (scale == 0) scale = 1;
  Real tol = pow(Real(10), -static_cast<int>(working_digits()) + 15) * scale;
  for (std::size_t k = 0; k <= n + m; ++k)
    if (abs(re[k] - C(k)) > tol) return p;

  p.num = std::move(num);
  p.den = std::move(den);
  p.valid = true;
  return p;
}

Real eval(const PadeApproximant& p, const Real& x) {
  auto horner = [&](const std::vector<Real>& v) {
    Real s(0);
    for (std::size_t i = v.size(); i-- > 0;) s = s * x + v[i];
    return s;
  };
  return horner(p.num) / horner(p.den);
}

namespace {

// Drop trailing coefficients that are negligible relative to the largest.
std::size_t trimmed_degree(const std::vector<Real>& v) {
  Real mx(0);
  for (const Real& x : v)
    if (abs(x) > mx) mx = abs(x);
  Real thr = mx * pow(Real(10), -static_cast<int>(working_digits() / 2));
  std::size_t k = v.size() - 1;
  while (k > 0 && abs(v[k]) < thr) --k;
  return k;
}

}  // namespace

std::optional<Real> limit_ratio(const PadeApproximant& p) {
  if (!p.valid || p.num.empty() || p.den.empty()) return std::nullopt;
  long dn = static_cast<long>(trimmed_degree(p.num));
  long dm = static_cast<long>(trimmed_degree(p.den));
  // x^(m-n) * P behaves like x^{(m-n)-(dm-dn)} at infinity: the limit is the
  // leading-coefficient ratio when the reduced degrees keep the nominal
  // difference, 0 when the numerator falls short, infinite otherwise.
  long nominal = static_cast<long>(p.m) - static_cast<long>(p.n);
  if (dm - dn > nominal) return Real(0);
  if (dm - dn < nominal) return std::nullopt;
  return p.num[static_cast<std::size_t>(dn)] /
         p.den[static_cast<std::size_t>(dm)];
}

}  // namespace ampkit::pade
