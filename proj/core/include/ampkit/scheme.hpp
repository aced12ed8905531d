#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ampkit/corpus.hpp"

namespace ampkit::scheme {

struct Entry {
  std::size_t n = 0;
  Real amplitude{0};
  bool valid = false;
  std::optional<Real> percent_error;
};

struct AmplitudeSequence {
  std::string problem;
  std::string scheme;  // "standard" | "corrected"
  std::vector<Entry> entries;
};

// Standard route: amplitude estimates from Pade approximants of the series
// alone.  For a reduced series h ~ B z^sigma the transform T = h^{-1/sigma}
// decays like z^{-1}; A_n is the large-z limit of z T_{(n-1)/n}, raised back
// to the -sigma.  Problems with sigma = 0 use the diagonal of h directly, and
// integer-exponent problems that declare it use a direct [n+sigma/n] fit.
// Entries the fit cannot produce (singular system, wrong-sign limit under a
// fractional power, infinite limit) are reported invalid, never thrown.
AmplitudeSequence standard_amplitudes(const corpus::Problem& p,
                                      std::size_t n_max);

// Corrected route: divide the series by the control-function expansion K so
// the ratio G tends to a constant, then A_n = A0 * lim G_{n/n} with A0 the
// control's own amplitude.  A defective diagonal falls back to the largest
// valid lower diagonal (down to G_{0/0} = 1, i.e. A_n = A0), matching the
// early flat entries of the published sequences.  Problems flagged
// root_sequence report the iterated-root amplitudes B_k instead.
AmplitudeSequence corrected_amplitudes(const corpus::Problem& p,
                                       std::size_t n_max);

// Fill percent_error = 100 (A_n / exact - 1) for the valid entries.
void error_table(AmplitudeSequence& seq, const Real& exact);

// Control-function expansion (to `order`) and large-variable amplitude for a
// problem, exposed for fixtures and the specializations below.
series::PowerSeries control_series(const corpus::Problem& p,
                                   std::size_t order);
Real control_amplitude(const corpus::Problem& p);

// Hard-sphere equation of state: fit P_{5/5}(y) to Z(y)/K(x(y)) using the
// first ten nontrivial virial coefficients, re-expand K(x(y)) P_{5/5}(y), and
// report the reproduced B_2..B_11 plus the predicted B_12..B_16.
struct VirialTable {
  std::vector<Real> reproduced;  // B_2..B_11
  std::vector<Real> predicted;   // B_12..B_16
};
VirialTable hard_sphere_eos();

// Membrane pressure between rigid walls: (pi^2/8) K(x) P_{4/4}(x) x^{-2} at
// x -> infinity.
Real membrane_pressure();

}  // namespace ampkit::scheme
