#pragma once

#include <cstddef>
#include <vector>

#include "ampkit/real.hpp"

namespace ampkit::series {

// Truncated power series: coefficients c[0..order] in the expansion variable.
// The order is the truncation order, not the polynomial degree; trailing
// zeros are meaningful (they say "known and zero through this order").
struct PowerSeries {
  std::vector<Real> c;

  PowerSeries() = default;
  explicit PowerSeries(std::size_t order) : c(order + 1, Real(0)) {}
  explicit PowerSeries(std::vector<Real> coeffs) : c(std::move(coeffs)) {}

  std::size_t order() const { return c.empty() ? 0 : c.size() - 1; }
  const Real& operator[](std::size_t i) const { return c[i]; }
  Real& operator[](std::size_t i) { return c[i]; }

  // Reinterpret the truncated series as an exact polynomial known to `order`:
  // coefficients beyond the stored ones are zero by fiat.  Several published
  // constructions depend on this (the "polynomial interpretation").
  PowerSeries extended(std::size_t order) const;

  PowerSeries truncated(std::size_t order) const;
};

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries sub(const PowerSeries& f, const PowerSeries& g);
PowerSeries scale(const PowerSeries& f, const Real& a);

// Cauchy product, truncated at `order` (default: shorter input's order).
PowerSeries mul(const PowerSeries& f, const PowerSeries& g);
PowerSeries mul(const PowerSeries& f, const PowerSeries& g, std::size_t order);

// f/g with g[0] != 0.
PowerSeries div(const PowerSeries& f, const PowerSeries& g);
PowerSeries div(const PowerSeries& f, const PowerSeries& g, std::size_t order);

// f^p for arbitrary real p, f[0] > 0 (general c0: computed as
// f[0]^p * (f/f[0])^p via the first-order recurrence).
PowerSeries pow(const PowerSeries& f, const Real& p);
PowerSeries pow(const PowerSeries& f, const Real& p, std::size_t order);

// log(f), f[0] > 0, and exp(f).
PowerSeries log(const PowerSeries& f);
PowerSeries exp(const PowerSeries& f);

// f(g(x)) with g[0] == 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g,
                    std::size_t order);

// Horner evaluation of the truncated polynomial.
Real eval(const PowerSeries& f, const Real& x);

}  // namespace ampkit::series
