#pragma once

#include <stdexcept>
#include <string>

#include "spectra/numeric.hpp"

namespace spectra {

/// Boundary condition selecting the whole-line operator or one of the
/// half-line restrictions with a Neumann/Dirichlet condition at t = 0.
enum class Boundary { WholeLine, HalfLineNeumann, HalfLineDirichlet };

inline const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::WholeLine: return "whole_line";
    case Boundary::HalfLineNeumann: return "half_line_neumann";
    case Boundary::HalfLineDirichlet: return "half_line_dirichlet";
  }
  return "?";
}

/// The operator family -d^2/dt^2 + (t^{k+1}/(k+1) - alpha)^2.
struct OperatorSpec {
  int k = 1;
  double alpha = 0.0;
  Boundary boundary = Boundary::WholeLine;
};

inline void validate(const OperatorSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("OperatorSpec: k must be >= 1");
}

/// Scaling parameter of the rho-family; rho = 1 recovers the plain operator.
struct ScalingParam {
  double rho = 1.0;
};

/// The well term t^{k+1}/(k+1).
inline double well_term(int k, double t) { return num::int_pow(t, static_cast<unsigned>(k + 1)) / (k + 1); }

/// (t^{k+1}/(k+1) - alpha)^2, always >= 0.
inline double potential(const OperatorSpec& spec, double t) {
  const double w = well_term(spec.k, t) - spec.alpha;
  return w * w;
}

/// (rho^{k+1} t^{k+1}/(k+1) - alpha)^2. At rho = 1 this follows the exact
/// same arithmetic path as potential().
inline double scaled_potential(const OperatorSpec& spec, ScalingParam scaling, double t) {
  if (!(scaling.rho > 0.0)) throw std::invalid_argument("scaled_potential: rho must be > 0");
  const unsigned p = static_cast<unsigned>(spec.k + 1);
  const double w = num::int_pow(scaling.rho, p) * num::int_pow(t, p) / (spec.k + 1) - spec.alpha;
  return w * w;
}

/// The nonnegative root of t^{k+1}/(k+1) = alpha, i.e. ((k+1) alpha)^{1/(k+1)}.
/// For alpha < 0 there is no nonnegative real root (k+1 even for odd k; the
/// root would be negative for even k), so that input is rejected.
inline double well_center(const OperatorSpec& spec) {
  validate(spec);
  if (spec.alpha < 0.0)
    throw std::domain_error("well_center: no nonnegative root for alpha < 0");
  return std::pow((spec.k + 1) * spec.alpha, 1.0 / (spec.k + 1));
}

}  // namespace spectra
