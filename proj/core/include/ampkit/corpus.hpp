#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ampkit/selfsim.hpp"

namespace ampkit::corpus {

using series::PowerSeries;

// Control-function recipe.  Root and Factor are built from the problem's own
// series; Shifted carries its parameters verbatim.
struct Control {
  enum class Kind { None, Root, Factor, Shifted };
  Kind kind = Kind::None;
  std::size_t order = 0;  // root order k, or factor order M
  selfsim::ShiftedRoot fixture{};
};

// A benchmark problem, stored in reduced form: the generator emits the series
// h in the mapped expansion variable (x^alpha factored out, z = x^2 folded in
// for even series), and sigma is h's large-variable exponent in that
// variable.  The final amplitude is amp_scale times what the pipelines
// extract from h (the scale absorbs constant prefactors such as pi^2/8).
struct Problem {
  std::string id;
  std::string notes;
  std::function<PowerSeries(std::size_t)> reduced;  // order -> series
  Real sigma{0};
  Real amp_scale{1};
  std::optional<Real> exact;      // exact amplitude, already scaled
  std::optional<Real> reference;  // non-exact reference value (e.g. MC)
  Control control;

  enum class StandardMode { Transform, Diagonal, DirectInteger };
  StandardMode std_mode = StandardMode::Transform;
  enum class CorrectedMode { Pade, RootSequence };
  CorrectedMode cor_mode = CorrectedMode::Pade;

  std::size_t max_series = 0;     // deepest coefficient the generator yields
  std::size_t extend_to = 0;      // treat the series as an exact polynomial
                                  // and zero-extend it to this order (0: off)
  std::size_t max_standard = 0;   // recommended order caps
  std::size_t max_corrected = 0;
};

std::vector<std::string> list();

// Fresh problem at the current working precision.  Throws std::out_of_range
// for an unknown id.
Problem get(const std::string& id);

// Hard-sphere virial coefficients B_1..B_16 (B_4 and below exact, the rest
// at published precision), for the equation-of-state construction.
std::vector<Real> hard_sphere_virials();

// Problem-definition file: {id, coefficients:[...] | generator:"builtin:<id>",
// alpha, s, exact?, control:{kind:"root"|"factor"|"shifted"|"none", k?, M?,
// fixture?:{v2,v3,v4,c}, var_map?:"z=x^2"}}.  Numbers may be given as strings
// to preserve precision.
Problem load_json(const std::string& path);

}  // namespace ampkit::corpus
