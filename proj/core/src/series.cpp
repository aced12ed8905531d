#include "ampkit/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ampkit::series {

PowerSeries PowerSeries::extended(std::size_t order) const {
  PowerSeries out(order);
  for (std::size_t i = 0; i < c.size() && i <= order; ++i) out.c[i] = c[i];
  return out;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  return extended(std::min(order, this->order()));
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  std::size_t n = std::min(f.order(), g.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) out.c[i] = f.c[i] + g.c[i];
  return out;
}

PowerSeries sub(const PowerSeries& f, const PowerSeries& g) {
  std::size_t n = std::min(f.order(), g.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) out.c[i] = f.c[i] - g.c[i];
  return out;
}

PowerSeries scale(const PowerSeries& f, const Real& a) {
  PowerSeries out = f;
  for (auto& v : out.c) v *= a;
  return out;
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g,
                std::size_t order) {
  PowerSeries out(order);
  std::size_t nf = std::min(f.order(), order);
  for (std::size_t i = 0; i <= nf; ++i) {
    if (f.c[i] == 0) continue;
    std::size_t ng = std::min(g.order(), order - i);
    for (std::size_t j = 0; j <= ng; ++j) out.c[i + j] += f.c[i] * g.c[j];
  }
  return out;
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g) {
  return mul(f, g, std::min(f.order(), g.order()));
}

PowerSeries div(const PowerSeries& f, const PowerSeries& g,
                std::size_t order) {
  if (g.c.empty() || g.c[0] == 0)
    throw std::domain_error("series div: g[0] == 0");
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Real acc = n <= f.order() ? f.c[n] : Real(0);
    std::size_t jmax = std::min(n, g.order());
    for (std::size_t j = 1; j <= jmax; ++j) acc -= g.c[j] * out.c[n - j];
    out.c[n] = acc / g.c[0];
  }
  return out;
}

PowerSeries div(const PowerSeries& f, const PowerSeries& g) {
  return div(f, g, std::min(f.order(), g.order()));
}

// g = f^p via g' f = p f' g (J.C.P. Miller), with explicit c0 handling.
PowerSeries pow(const PowerSeries& f, const Real& p, std::size_t order) {
  if (f.c.empty() || f.c[0] <= 0)
    throw std::domain_error("series pow: f[0] must be positive");
  Real c0 = f.c[0];
  Real pref = boost::multiprecision::pow(c0, p);
  PowerSeries out(order);
  out.c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Real acc = 0;
    std::size_t jmax = std::min(n, f.order());
    for (std::size_t j = 1; j <= jmax; ++j) {
      // (p*j - (n-j)) * a_j * g_{n-j}, with a = f / c0
      acc += (p * Real(j) - Real(n - j)) * (f.c[j] / c0) * out.c[n - j];
    }
    out.c[n] = acc / Real(n);
  }
  for (auto& v : out.c) v *= pref;
  return out;
}

PowerSeries pow(const PowerSeries& f, const Real& p) {
  return pow(f, p, f.order());
}

PowerSeries log(const PowerSeries& f) {
  if (f.c.empty() || f.c[0] <= 0)
    throw std::domain_error("series log: f[0] must be positive");
  std::size_t order = f.order();
  // (log f)' = f'/f, integrate term-wise.
  PowerSeries out(order);
  out.c[0] = boost::multiprecision::log(f.c[0]);
  if (order == 0) return out;
  PowerSeries fp(order - 1);
  for (std::size_t i = 0; i + 1 <= order; ++i) fp.c[i] = Real(i + 1) * f.c[i + 1];
  PowerSeries lf = div(fp, f.truncated(order - 1), order - 1);
  for (std::size_t n = 1; n <= order; ++n) out.c[n] = lf.c[n - 1] / Real(n);
  return out;
}

PowerSeries exp(const PowerSeries& f) {
  std::size_t order = f.order();
  PowerSeries out(order);
  out.c[0] = boost::multiprecision::exp(f.c[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    Real acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += Real(j) * f.c[j] * out.c[n - j];
    out.c[n] = acc / Real(n);
  }
  return out;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g,
                    std::size_t order) {
  if (!g.c.empty() && g.c[0] != 0)
    throw std::domain_error("series compose: g[0] != 0");
  PowerSeries out(order);
  out.c[0] = f.c.empty() ? Real(0) : f.c[0];
  PowerSeries gp(order);
  gp.c[0] = 1;
  for (std::size_t k = 1; k < f.c.size(); ++k) {
    gp = mul(gp, g.extended(order), order);
    if (f.c[k] == 0) continue;
    for (std::size_t i = 0; i <= order; ++i) out.c[i] += f.c[k] * gp.c[i];
  }
  return out;
}

Real eval(const PowerSeries& f, const Real& x) {
  Real acc = 0;
  for (std::size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
  return acc;
}

}  // namespace ampkit::series
