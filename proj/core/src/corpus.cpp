#include "ampkit/corpus.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ampkit::corpus {

namespace {

using series::PowerSeries;
using Rational = boost::multiprecision::cpp_rational;

Real pi_v() { return 4 * atan(Real(1)); }

Real fact(std::size_t n) {
  Real r(1);
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<int>(i);
  return r;
}

// Ground-state energy coefficients of the quartic anharmonic oscillator,
// exact rationals: write the wavefunction as exp(-x^2/2 + sum_k g^k B_k(x))
// with B_k an even polynomial of degree 2k+2; matching powers of g in the
// Schroedinger equation gives a triangular recursion for the B_k and the
// energy corrections e_k.
std::vector<Rational> quartic_energy(std::size_t N) {
  std::map<std::size_t, std::map<long, Rational>> B;  // k -> {m: coeff x^{2m}}
  std::vector<Rational> es{Rational(1, 2)};
  for (std::size_t k = 1; k <= N; ++k) {
    std::map<long, Rational> r;  // x^{2m} coefficients of the source term
    if (k == 1) r[2] -= 1;       // the -g x^4 perturbation
    for (std::size_t i = 1; i < k; ++i)
      for (const auto& [mi, bi] : B[i])
        for (const auto& [mj, bj] : B[k - i])
          r[mi + mj - 1] += Rational(1, 2) * (2 * mi * bi) * (2 * mj * bj);
    // x B_k' - B_k''/2 + r(x) = e_k: top-down solve for the b_m, then the
    // constant term fixes e_k.
    std::map<long, Rational> b;
    for (long m = static_cast<long>(k) + 1; m >= 1; --m) {
      Rational bnext = b.count(m + 1) ? b[m + 1] : Rational(0);
      Rational rm = r.count(m) ? r[m] : Rational(0);
      b[m] = (rm + Rational((m + 1) * (2 * m + 1)) * bnext) / Rational(2 * m);
    }
    Rational r0 = r.count(0) ? r[0] : Rational(0);
    es.push_back(-b[1] - r0);
    B[k] = std::move(b);
  }
  return es;
}

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q).str()) /
         Real(boost::multiprecision::denominator(q).str());
}

PowerSeries quartic_series(std::size_t N) {
  auto es = quartic_energy(N);
  PowerSeries f(N);
  for (std::size_t n = 0; n <= N; ++n) f[n] = to_real(es[n]);
  return f;
}

PowerSeries mittag_leffler_series(std::size_t N) {
  PowerSeries f(N);
  for (std::size_t n = 0; n <= N; ++n) {
    Real g = tgamma(Real(static_cast<int>(n)) / 2 + 1);
    f[n] = (n % 2 ? -1 : 1) / g;
  }
  return f;
}

PowerSeries correlation_series(std::size_t N) {
  // 2 sqrt(1 + x^2/4) - x
  PowerSeries base(N);
  base[0] = 1;
  if (N >= 2) base[2] = Real(1) / 4;
  PowerSeries f = series::scale(series::pow(base, Real(1) / 2, N), Real(2));
  if (N >= 1) f[1] -= 1;
  return f;
}

PowerSeries debye_huckel_series(std::size_t N) {
  PowerSeries f(N);
  for (std::size_t n = 0; n <= N; ++n)
    f[n] = Real(n % 2 ? -2 : 2) / fact(n + 2);
  return f;
}

PowerSeries branched_polymer_series(std::size_t N) {
  // a_n = (-3/2)^n Gamma(3/2) / Gamma(n + 3/2)
  PowerSeries f(N);
  Real g32 = tgamma(Real(3) / 2);
  Real c(1);
  for (std::size_t n = 0; n <= N; ++n) {
    f[n] = c * g32 / tgamma(Real(static_cast<int>(n)) + Real(3) / 2);
    c *= Real(-3) / 2;
  }
  return f;
}

PowerSeries particle_in_box_series(std::size_t N) {
  // 8 pi^2 g^2 f(g) = 1 + pi^4 g^2/32 + (pi^2 g/4) sqrt(1 + pi^4 g^2/64)
  Real pi = pi_v();
  Real p2 = pi * pi, p4 = p2 * p2;
  PowerSeries f(N);
  f[0] = 1;
  if (N >= 2) f[2] = p4 / 32;
  Real binom(1), powg(1);  // running C(1/2,k) (pi^4/64)^k
  for (std::size_t k = 0; 2 * k + 1 <= N; ++k) {
    f[2 * k + 1] += (p2 / 4) * binom * powg;
    binom *= (Real(1) / 2 - static_cast<int>(k)) / (static_cast<int>(k) + 1);
    powg *= p4 / 64;
  }
  return f;
}

PowerSeries generating_series(std::size_t N, const Real& a) {
  // a_n = 2^n (a/2 - n/2 + 1)^{rising n} / (n! (n/a + 1))
  PowerSeries f(N);
  for (std::size_t n = 0; n <= N; ++n) {
    Real rise(1);
    Real start = a / 2 - Real(static_cast<int>(n)) / 2 + 1;
    for (std::size_t j = 0; j < n; ++j) rise *= start + static_cast<int>(j);
    Real p2 = pow(Real(2), static_cast<int>(n));
    f[n] = p2 * rise / (fact(n) * (Real(static_cast<int>(n)) / a + 1));
  }
  return f;
}

PowerSeries scattering_series(std::size_t N) {
  // S(x) = int_0^x w(t)^2 dt with w(t) = sin t/t^3 - cos t/t^2
  //      = sum_{n>=1} (-1)^{n+1} 2n t^{2n-2}/(2n+1)!.
  // Reduced: S = x h(x^2), h_m = [t^{2m}](w^2) / (2m+1); coefficients beyond
  // the few usually quoted are genuine, not zero-padding.
  PowerSeries wz(N);  // w is even in t, so expand it in z = t^2 directly
  for (std::size_t m = 0; m <= N; ++m) {
    Real c = Real(2 * (static_cast<int>(m) + 1)) / fact(2 * m + 3);
    wz[m] = (m % 2 ? -c : c);
  }
  PowerSeries w2 = series::mul(wz, wz, N);
  PowerSeries h(N);
  for (std::size_t m = 0; m <= N; ++m)
    h[m] = w2[m] / (2 * static_cast<int>(m) + 1);
  return h;
}

PowerSeries wilson_series(std::size_t N) {
  // exp(-x) * 2 I_1(x)/x; the Bessel part is even with coefficients
  // 1/(4^k k! (k+1)!).
  PowerSeries bessel(N), ex(N);
  Real c(1);
  for (std::size_t k = 0; 2 * k <= N; ++k) {
    bessel[2 * k] = c;
    c /= 4 * (static_cast<int>(k) + 1) * (static_cast<int>(k) + 2);
  }
  Real e(1);
  for (std::size_t n = 0; n <= N; ++n) {
    ex[n] = e;
    e /= -(static_cast<int>(n) + 1);
  }
  return series::mul(bessel, ex, N);
}

PowerSeries error_function_series(std::size_t N) {
  // erf integrand expanded and integrated: F = x h(x^2),
  // h_n = (-1)^n / (n! (2n+1)).
  PowerSeries h(N);
  for (std::size_t n = 0; n <= N; ++n)
    h[n] = Real(n % 2 ? -1 : 1) / (fact(n) * (2 * static_cast<int>(n) + 1));
  return h;
}

PowerSeries debye_series(std::size_t N) {
  // D_1(x) = (1/x) int_0^x y/(e^y - 1) dy; with t/(e^t-1) = sum b_n t^n the
  // coefficients are b_n/(n+1).  Series division of 1 by (e^t-1)/t is stable
  // here because the pipeline precision is far above the cancellation loss.
  PowerSeries g(N);
  for (std::size_t n = 0; n <= N; ++n) g[n] = 1 / fact(n + 1);
  PowerSeries one(N);
  one[0] = 1;
  PowerSeries b = series::div(one, g, N);
  PowerSeries h(N);
  for (std::size_t n = 0; n <= N; ++n) h[n] = b[n] / (static_cast<int>(n) + 1);
  return h;
}

PowerSeries connected_moments_series(std::size_t N) {
  // E(t) = (121 u^3 + 189199 u^2 + 8180919 u + 6561) /
  //        ((81 - u)(121 u^2 + 20198 u + 81)),  u = exp(-4t).
  PowerSeries u(N);
  Real c(1);
  for (std::size_t n = 0; n <= N; ++n) {
    u[n] = c;
    c *= Real(-4) / (static_cast<int>(n) + 1);
  }
  auto poly = [&](std::initializer_list<long> coeffs) {
    // value of sum c_k u^k as a series in t
    PowerSeries acc(N);
    for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it) {
      acc = series::mul(acc, u, N);
      acc[0] += static_cast<int>(*it);
    }
    return acc;
  };
  PowerSeries num = poly({6561, 8180919, 189199, 121});
  PowerSeries d1 = poly({81, -1});
  PowerSeries d2 = poly({81, 20198, 121});
  return series::div(num, series::mul(d1, d2, N), N);
}

PowerSeries schwinger_series(std::size_t N) {
  static const char* printed[] = {"1",         "2",         "-10",
                                  "78.66667",  "-736.2222", "7572.929",
                                  "-82736.69", "942803.4"};
  if (N > 7)
    throw std::out_of_range("schwinger: only eight coefficients are known");
  PowerSeries f(N);
  for (std::size_t n = 0; n <= N; ++n) f[n] = Real(printed[n]);
  return f;
}

PowerSeries bose_series(std::size_t N, const char* const a[5]) {
  // reduced: c1(x)/x, five loop coefficients
  if (N > 4)
    throw std::out_of_range("bose: only five coefficients are known");
  PowerSeries h(N);
  for (std::size_t n = 0; n <= N; ++n) h[n] = Real(a[n]);
  return h;
}

const char* kBoseO1[5] = {"0.334931", "-0.178478", "0.129786", "-0.115999",
                          "0.120433"};
const char* kBoseO2[5] = {"0.223286", "-0.0661032", "0.026446", "-0.0129177",
                          "0.007290373"};
const char* kBoseO4[5] = {"0.167465", "-0.0297465", "0.00700448",
                          "-0.00198926", "0.000647007"};

std::vector<Real> virials() {
  // B_1..B_16; B_4 and below are exact, the rest at published precision.
  Real pi = pi_v();
  Real b4 = (2707 * pi + 438 * sqrt(Real(2)) - 4131 * acos(Real(1) / 3)) /
            (70 * pi);
  std::vector<Real> B{Real(1),          Real(4),          Real(10),
                      b4,               Real("28.224512"), Real("39.815148"),
                      Real("53.344420"), Real("68.537549"), Real("85.812838"),
                      Real("105.775104"), Real("127.93"),  Real("152.67"),
                      Real("181.19"),    Real("214.75"),   Real("246.96"),
                      Real("279.17")};
  return B;
}

PowerSeries hard_sphere_series(std::size_t N) {
  // Z re-expanded in x = y/(1-y): compose Z(y) = 1 + sum B_{k+1} y^k with
  // y = x/(1+x).  Only the first ten nontrivial virial coefficients feed the
  // construction, so the x-series is honest through order 10.
  if (N > 10)
    throw std::out_of_range(
        "hard_sphere: x-series supported through order 10 only");
  auto B = virials();
  PowerSeries zy(10);
  zy[0] = 1;
  for (std::size_t k = 1; k <= 10; ++k) zy[k] = B[k];
  PowerSeries y(10);
  Real sgn(1);
  for (std::size_t n = 1; n <= 10; ++n) {
    y[n] = sgn;  // x/(1+x) = x - x^2 + x^3 - ...
    sgn = -sgn;
  }
  return series::compose(zy, y, 10).truncated(N);
}

PowerSeries membrane_series(std::size_t N) {
  static const char* printed[] = {"1",           "0.25",
                                  "0.03125",     "2.176347e-3",
                                  "0.552721e-4", "-0.721482e-5",
                                  "-1.777848e-6"};
  if (N > 6)
    throw std::out_of_range("membrane: only seven coefficients are known");
  PowerSeries f(N);
  for (std::size_t n = 0; n <= N; ++n) f[n] = Real(printed[n]);
  return f;
}

selfsim::ShiftedRoot connected_moments_control() {
  selfsim::ShiftedRoot sr;
  sr.v2 = Real("403171240048919") / Real("85626857995920");
  sr.v3 = Real("36337990380139") / Real("85626857995920");
  sr.v4 = Real("2331886111") / Real("1340069829");
  sr.c = Real(9) / 10;
  return sr;
}

Problem make(const std::string& id) {
  Problem p;
  p.id = id;
  Real pi = pi_v();
  if (id == "mittag_leffler") {
    p.reduced = mittag_leffler_series;
    p.sigma = -1;
    p.exact = 1 / sqrt(pi);
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 64;
    p.max_standard = p.max_corrected = 10;
    p.notes = "erfc(x) exp(x^2); converges under both schemes";
  } else if (id == "quartic_oscillator") {
    p.reduced = quartic_series;
    p.sigma = Real(1) / 3;
    p.exact = Real("0.667986");
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 19;
    p.max_standard = p.max_corrected = 9;
    p.notes = "ground-state energy, weak-coupling series (exact rationals)";
  } else if (id == "correlation") {
    p.reduced = correlation_series;
    p.sigma = -1;
    p.exact = Real(2);
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 64;
    p.max_standard = p.max_corrected = 10;
    p.notes = "sqrt(x^2+4) - x; standard scheme oscillates between 0 and 4";
  } else if (id == "debye_huckel") {
    p.reduced = debye_huckel_series;
    p.sigma = -1;
    p.exact = Real(2);
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 64;
    p.max_standard = p.max_corrected = 10;
    p.notes = "Gaussian-polymer correlation function";
  } else if (id == "branched_polymer") {
    p.reduced = branched_polymer_series;
    p.sigma = -1;
    p.exact = Real(1) / 3;
    p.control = {Control::Kind::Factor, 2, {}};
    p.max_series = 64;
    p.max_standard = p.max_corrected = 12;
    p.notes = "structure factor; factor-approximant control";
  } else if (id == "particle_in_box") {
    p.reduced = particle_in_box_series;
    p.sigma = 2;
    p.amp_scale = 1 / (8 * pi * pi);
    p.exact = pi * pi / 128;
    p.control = {Control::Kind::Root, 3, {}};
    p.std_mode = Problem::StandardMode::DirectInteger;
    p.max_series = 64;
    p.max_standard = p.max_corrected = 8;
    p.notes = "8 pi^2 g^2 f(g); standard fit converges to a wrong value";
  } else if (id == "generating_function") {
    p.reduced = [](std::size_t N) {
      return generating_series(N, Real(1) / 3);
    };
    p.sigma = Real(1) / 3;
    p.exact = pow(Real(2), Real(1) / 3);
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 64;
    p.max_standard = p.max_corrected = 10;
    p.notes = "(sqrt(x^2+1)+x)^(1/3); standard amplitude stuck at 1";
  } else if (id == "scattering") {
    p.reduced = scattering_series;
    p.sigma = Real(-1) / 2;
    p.exact = pi / 15;
    p.control = {Control::Kind::Root, 1, {}};
    p.cor_mode = Problem::CorrectedMode::RootSequence;
    p.max_series = 64;
    p.max_standard = 10;
    p.max_corrected = 25;
    p.notes = "square-well scattering integral, even series in z = x^2; the "
              "stable sequence is the iterated-root amplitudes themselves";
  } else if (id == "wilson_loop") {
    p.reduced = wilson_series;
    p.sigma = Real(-3) / 2;
    p.exact = sqrt(2 / pi);
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 128;
    p.max_standard = p.max_corrected = 30;
    p.notes = "2 exp(-x) I_1(x)/x";
  } else if (id == "error_function") {
    p.reduced = error_function_series;
    p.sigma = Real(-1) / 2;
    p.exact = sqrt(pi) / 2;
    p.control = {Control::Kind::Root, 3, {}};
    p.max_series = 128;
    p.max_standard = p.max_corrected = 30;
    p.notes = "int_0^x exp(-u^2) du, even series in z = x^2";
  } else if (id == "debye") {
    p.reduced = debye_series;
    p.sigma = -1;
    p.exact = pi * pi / 6;
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 256;
    p.max_standard = p.max_corrected = 100;
    p.notes = "Debye function D_1";
  } else if (id == "connected_moments") {
    p.reduced = connected_moments_series;
    p.sigma = 0;
    p.exact = Real(1);
    p.control = {Control::Kind::Shifted, 0, connected_moments_control()};
    p.std_mode = Problem::StandardMode::Diagonal;
    p.max_series = 64;
    p.max_standard = p.max_corrected = 20;
    p.notes = "harmonic-oscillator moment generating function in t";
  } else if (id == "schwinger") {
    p.reduced = schwinger_series;
    p.sigma = Real(1) / 4;
    p.exact = Real("0.5642");
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 7;
    p.max_standard = 4;
    p.max_corrected = 3;
    p.notes = "lattice energy gap; only eight series coefficients available, "
              "which caps the reachable orders";
  } else if (id == "bose_O1" || id == "bose_O2" || id == "bose_O4") {
    const char* const* a =
        id == "bose_O1" ? kBoseO1 : (id == "bose_O2" ? kBoseO2 : kBoseO4);
    p.reduced = [a](std::size_t N) { return bose_series(N, a); };
    p.sigma = -1;
    p.reference =
        id == "bose_O1" ? Real("1.09") : (id == "bose_O2" ? Real("1.32")
                                                          : Real("1.6"));
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 4;
    p.extend_to = 8;
    p.max_standard = 2;
    p.max_corrected = 4;
    p.notes = "critical-temperature coefficient c1, five-loop series in x; "
              "reference values are Monte Carlo";
  } else if (id == "hard_sphere") {
    p.reduced = hard_sphere_series;
    p.sigma = 3;
    p.reference = Real(2);
    p.control = {Control::Kind::Root, 2, {}};
    p.max_series = 10;
    p.max_standard = p.max_corrected = 5;
    p.notes = "compressibility factor in x = y/(1-y); the equation-of-state "
              "construction lives in the scheme layer";
  } else if (id == "membrane") {
    p.reduced = membrane_series;
    p.sigma = 2;
    p.amp_scale = pi * pi / 8;
    p.reference = Real("0.0798");
    p.control = {Control::Kind::Root, 3, {}};
    p.max_series = 6;
    p.extend_to = 8;
    p.max_standard = 3;
    p.max_corrected = 4;
    p.notes = "fluid-membrane pressure; reference value is Monte Carlo";
  } else {
    throw std::out_of_range("unknown problem: " + id);
  }
  return p;
}

const std::vector<std::string>& ids() {
  static const std::vector<std::string> v{
      "mittag_leffler", "quartic_oscillator", "correlation",
      "debye_huckel",   "branched_polymer",   "particle_in_box",
      "generating_function", "scattering",    "wilson_loop",
      "error_function", "debye",              "connected_moments",
      "schwinger",      "bose_O1",            "bose_O2",
      "bose_O4",        "hard_sphere",        "membrane"};
  return v;
}

Real json_real(const nlohmann::json& v) {
  // numbers pass through as their literal decimal text to avoid a double
  // round-trip
  if (v.is_string()) return Real(v.get<std::string>());
  return Real(v.dump());
}

}  // namespace

std::vector<std::string> list() { return ids(); }

std::vector<Real> hard_sphere_virials() { return virials(); }

Problem get(const std::string& id) { return make(id); }

Problem load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  nlohmann::json j;
  in >> j;

  if (j.contains("generator")) {
    std::string g = j["generator"].get<std::string>();
    const std::string prefix = "builtin:";
    if (g.rfind(prefix, 0) != 0)
      throw std::runtime_error("unknown generator: " + g);
    Problem p = get(g.substr(prefix.size()));
    if (j.contains("id")) p.id = j["id"].get<std::string>();
    if (j.contains("exact")) p.exact = json_real(j["exact"]);
    return p;
  }

  Problem p;
  p.id = j.at("id").get<std::string>();
  std::vector<Real> c;
  for (const auto& v : j.at("coefficients")) c.push_back(json_real(v));
  std::size_t alpha = j.value("alpha", 0);
  bool even = j.value("var_map", std::string()) == "z=x^2";
  Real s = json_real(j.at("s"));

  // reduce: drop the x^alpha prefactor, fold z = x^2 for even series
  std::vector<Real> h;
  for (std::size_t i = alpha; i < c.size(); i += even ? 2 : 1)
    h.push_back(c[i]);
  if (h.empty() || h[0] == 0)
    throw std::runtime_error("problem file: reduced series must start "
                             "nonzero (check alpha)");
  p.reduced = [h](std::size_t N) {
    if (N + 1 > h.size())
      throw std::out_of_range("problem file: series too short");
    return PowerSeries{std::vector<Real>(h)}.truncated(N);
  };
  p.sigma = (s - static_cast<int>(alpha)) / (even ? 2 : 1);
  p.max_series = h.size() - 1;
  p.max_standard = p.max_corrected = p.max_series / 2;
  if (p.sigma == 0) p.std_mode = Problem::StandardMode::Diagonal;
  if (j.contains("exact")) p.exact = json_real(j["exact"]);

  if (j.contains("control")) {
    const auto& jc = j["control"];
    std::string kind = jc.value("kind", "none");
    if (kind == "root") {
      p.control = {Control::Kind::Root, jc.at("k").get<std::size_t>(), {}};
    } else if (kind == "factor") {
      p.control = {Control::Kind::Factor, jc.at("M").get<std::size_t>(), {}};
    } else if (kind == "shifted") {
      const auto& f = jc.at("fixture");
      selfsim::ShiftedRoot sr;
      sr.v2 = json_real(f.at("v2"));
      sr.v3 = json_real(f.at("v3"));
      sr.v4 = json_real(f.at("v4"));
      sr.c = json_real(f.at("c"));
      p.control = {Control::Kind::Shifted, 0, sr};
    } else if (kind != "none") {
      throw std::runtime_error("problem file: unknown control kind " + kind);
    }
  }
  return p;
}

}  // namespace ampkit::corpus
