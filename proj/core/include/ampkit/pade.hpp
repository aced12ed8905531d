#pragma once

#include <cstddef>
#include <optional>

#include "ampkit/series.hpp"

namespace ampkit::pade {

using series::PowerSeries;

// Rational approximant P_{n/m}: num has degree <= n, den degree <= m with
// den[0] == 1.  `valid` is false when the Toeplitz fit was singular or the
// re-expansion check failed; invalid approximants carry empty coefficients.
struct PadeApproximant {
  std::vector<Real> num, den;
  std::size_t n = 0, m = 0;
  bool valid = false;
};

// Accuracy-through-order fit from c[0..n+m].  Singular systems yield an
// invalid approximant, not an exception: defective Pade-table entries are an
// expected, meaningful outcome for the series this toolkit handles.
PadeApproximant fit(const PowerSeries& c, std::size_t n, std::size_t m);

Real eval(const PadeApproximant& p, const Real& x);

// Behavior as x -> infinity of x^(m-n) * P_{n/m}(x): ratio of the leading
// non-negligible coefficients.  Coefficients below 10^(-digits/2) relative to
// the largest one in their vector are treated as zero ("trimming"), so a
// defective fit with a tiny spurious leading term still reports the limit of
// its reduced form.  The optional is empty when the trimmed degree difference
// is not the nominal m-n (the limit is then 0 or infinite), or when p is
// invalid.
std::optional<Real> limit_ratio(const PadeApproximant& p);

// Dense LU with partial pivoting; returns false when singular to working
// tolerance.  Exposed for the Hankel/Vandermonde solves elsewhere.
bool solve_dense(std::vector<std::vector<Real>>& a, std::vector<Real>& b);

}  // namespace ampkit::pade
