#include "ampkit/scheme.hpp"

#include <stdexcept>

#include "ampkit/pade.hpp"

namespace ampkit::scheme {

using corpus::Control;
using corpus::Problem;
using series::PowerSeries;

namespace {

struct BuiltControl {
  PowerSeries expansion;
  Real amplitude;
};

BuiltControl build_control(const Problem& p, std::size_t order) {
  switch (p.control.kind) {
    case Control::Kind::Root: {
      std::size_t k = p.control.order;
      PowerSeries h = p.reduced(std::min(k, p.max_series));
      Real h0 = h[0];
      PowerSeries norm = series::scale(h, 1 / h0);
      auto r = selfsim::build_iterated_root(norm, h0, Real(0), p.sigma, k);
      return {selfsim::root_to_series(r, order), selfsim::root_amplitude(r)};
    }
    case Control::Kind::Factor: {
      std::size_t M = p.control.order;
      PowerSeries h = p.reduced(std::min(2 * M - 1, p.max_series));
      Real h0 = h[0];
      auto fa = selfsim::build_factor_approximant(series::scale(h, 1 / h0), M,
                                                 p.sigma);
      fa.prefactor = h0;
      return {selfsim::factor_to_series(fa, order),
              selfsim::factor_amplitude(fa)};
    }
    case Control::Kind::Shifted:
      return {selfsim::shifted_root_to_series(p.control.fixture, order),
              p.control.fixture.v2};
    case Control::Kind::None:
      break;
  }
  throw std::domain_error(p.id + ": no control function declared");
}

// A_n = L^{-sigma} with the sign/zero cases of a defective limit mapped to
// valid-zero or invalid rather than NaN.
bool back_transform(const Real& L, const Real& sigma, Real& out) {
  if (L > 0) {
    out = pow(L, -sigma);
    return true;
  }
  if (L == 0) {
    if (sigma < 0) {
      out = 0;
      return true;
    }
    return false;
  }
  // negative limit: only meaningful when -sigma is an integer power
  if (sigma == floor(sigma)) {
    out = pow(L, -static_cast<int>(sigma.convert_to<long>()));
    return true;
  }
  return false;
}

}  // namespace

PowerSeries control_series(const corpus::Problem& p, std::size_t order) {
  return build_control(p, order).expansion;
}

Real control_amplitude(const corpus::Problem& p) {
  return build_control(p, 0).amplitude;
}

AmplitudeSequence standard_amplitudes(const Problem& p, std::size_t n_max) {
  PrecisionGuard guard(digits_for_order(static_cast<unsigned>(n_max) + 2));
  AmplitudeSequence seq{p.id, "standard", {}};

  std::size_t s_int = 0;
  if (p.std_mode == Problem::StandardMode::DirectInteger)
    s_int = static_cast<std::size_t>(p.sigma.convert_to<long>());

  // deepest series order the order-n fit touches
  auto need = [&](std::size_t n) {
    switch (p.std_mode) {
      case Problem::StandardMode::Transform: return 2 * n - 1;  // [n-1/n]
      case Problem::StandardMode::Diagonal: return 2 * n;       // [n/n]
      case Problem::StandardMode::DirectInteger: return 2 * n + s_int;
    }
    return 2 * n;
  };
  std::size_t N = std::min(need(n_max), p.max_series);
  PowerSeries h = p.reduced(N);

  PowerSeries T;
  if (p.std_mode == Problem::StandardMode::Transform)
    T = series::pow(h, -1 / p.sigma);

  for (std::size_t n = 1; n <= n_max; ++n) {
    Entry e;
    e.n = n;
    if (need(n) > N) {
      seq.entries.push_back(e);  // not enough coefficients: invalid
      continue;
    }
    switch (p.std_mode) {
      case Problem::StandardMode::Transform: {
        auto fit = pade::fit(T, n - 1, n);
        auto L = pade::limit_ratio(fit);
        if (L) {
          Real a;
          if (back_transform(*L, p.sigma, a)) {
            e.amplitude = p.amp_scale * a;
            e.valid = true;
          }
        }
        break;
      }
      case Problem::StandardMode::Diagonal: {
        auto fit = pade::fit(h, n, n);
        auto L = pade::limit_ratio(fit);
        if (L) {
          e.amplitude = p.amp_scale * *L;
          e.valid = true;
        }
        break;
      }
      case Problem::StandardMode::DirectInteger: {
        auto fit = pade::fit(h, n + s_int, n);
        auto L = pade::limit_ratio(fit);
        if (L) {
          e.amplitude = p.amp_scale * *L;
          e.valid = true;
        }
        break;
      }
    }
    seq.entries.push_back(e);
  }
  if (p.exact) error_table(seq, *p.exact);
  return seq;
}

AmplitudeSequence corrected_amplitudes(const Problem& p, std::size_t n_max) {
  PrecisionGuard guard(digits_for_order(static_cast<unsigned>(n_max) + 2));
  AmplitudeSequence seq{p.id, "corrected", {}};

  if (p.cor_mode == Problem::CorrectedMode::RootSequence) {
    // the iterated-root amplitudes themselves, order by order
    PowerSeries h = p.reduced(std::min(n_max, p.max_series));
    Real h0 = h[0];
    PowerSeries norm = series::scale(h, 1 / h0);
    for (std::size_t k = 1; k <= n_max; ++k) {
      Entry e;
      e.n = k;
      try {
        auto r = selfsim::build_iterated_root(norm, h0, Real(0), p.sigma, k);
        e.amplitude = p.amp_scale * selfsim::root_amplitude(r);
        e.valid = true;
      } catch (const std::exception&) {
        // negative nest or vanishing step: report the order as invalid
      }
      seq.entries.push_back(e);
    }
    if (p.exact) error_table(seq, *p.exact);
    return seq;
  }

  std::size_t N =
      p.extend_to ? p.extend_to : std::min(2 * n_max, p.max_series);
  PowerSeries h = p.extend_to
                      ? p.reduced(p.max_series).extended(N)
                      : p.reduced(N);  // polynomial interpretation when the
                                       // series is a finite known polynomial

  BuiltControl K = build_control(p, N);
  PowerSeries G = series::div(h, K.expansion, N);
  Real A0 = p.amp_scale * K.amplitude;

  {
    Entry e;  // order 0 is the control's own amplitude
    e.n = 0;
    e.amplitude = A0;
    e.valid = true;
    seq.entries.push_back(e);
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    Entry e;
    e.n = n;
    if (2 * n > N) {
      seq.entries.push_back(e);
      continue;
    }
    // a defective diagonal falls back to the largest valid lower diagonal;
    // G_{0/0} = 1 always closes the chain (A_n = A0)
    for (std::size_t m = n + 1; m-- > 0;) {
      auto fit = pade::fit(G, m, m);
      if (!fit.valid) continue;
      auto L = pade::limit_ratio(fit);
      if (L) {
        e.amplitude = A0 * *L;
        e.valid = true;
      }
      break;  // valid fit, finite or not: stop the fallback here
    }
    seq.entries.push_back(e);
  }
  if (p.exact) error_table(seq, *p.exact);
  return seq;
}

void error_table(AmplitudeSequence& seq, const Real& exact) {
  for (Entry& e : seq.entries)
    if (e.valid) e.percent_error = 100 * (e.amplitude / exact - 1);
}

VirialTable hard_sphere_eos() {
  PrecisionGuard guard(digits_for_order(16));
  auto B = corpus::hard_sphere_virials();  // B_1..B_16

  PowerSeries zy(10);  // Z(y) through y^10 from B_2..B_11
  zy[0] = 1;
  for (std::size_t k = 1; k <= 10; ++k) zy[k] = B[k];

  corpus::Problem p = corpus::get("hard_sphere");
  PowerSeries hx = p.reduced(2);
  auto r = selfsim::build_iterated_root(hx, Real(1), Real(0), Real(3), 2);

  // K(x(y)) through y^15: expand the root in x, then substitute
  // x = y/(1-y) = y + y^2 + ...
  PowerSeries kx = selfsim::root_to_series(r, 15);
  PowerSeries xy(15);
  for (std::size_t n = 1; n <= 15; ++n) xy[n] = 1;
  PowerSeries ky = series::compose(kx, xy, 15);

  PowerSeries G = series::div(zy, ky.truncated(10), 10);
  auto fit = pade::fit(G, 5, 5);
  if (!fit.valid)
    throw std::runtime_error("hard-sphere fit unexpectedly singular");

  PowerSeries num(std::vector<Real>(fit.num)), den(std::vector<Real>(fit.den));
  PowerSeries pser = series::div(num.extended(15), den.extended(15));
  PowerSeries zstar = series::mul(ky, pser, 15);

  VirialTable out;
  for (std::size_t k = 1; k <= 10; ++k) out.reproduced.push_back(zstar[k]);
  for (std::size_t k = 11; k <= 15; ++k) out.predicted.push_back(zstar[k]);
  return out;
}

Real membrane_pressure() {
  corpus::Problem p = corpus::get("membrane");
  auto seq = corrected_amplitudes(p, 4);
  const Entry& last = seq.entries.back();
  if (!last.valid)
    throw std::runtime_error("membrane fit unexpectedly singular");
  return last.amplitude;
}

}  // namespace ampkit::scheme
