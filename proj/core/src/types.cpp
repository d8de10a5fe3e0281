#include "stratwave/types.hpp"

#include <cmath>
#include <string>

namespace stratwave {

FlowParams derive_params(double beta, int m) {
  if (!(beta > 0.0)) throw ParameterError("derive_params: beta must be positive");
  if (m < 1) throw ParameterError("derive_params: m must be >= 1");

  FlowParams p;
  p.beta = beta;
  p.m = m;
  const double radicand = 0.25 - beta * beta;
  if (radicand >= 0.0) {
    p.gamma = Complex(std::sqrt(radicand), 0.0);
  } else {
    // principal square root of a negative real: positive imaginary axis
    p.gamma = Complex(0.0, std::sqrt(-radicand));
  }
  p.mu = p.gamma.real();
  p.nu = p.gamma.imag();
  return p;
}

void GridSpec::validate() const {
  if (!(y_min < y_max)) throw ParameterError("GridSpec: y_min must be < y_max");
  if (n_points < 16) throw ParameterError("GridSpec: n_points must be >= 16");
}

void ComplexField::validate() const {
  grid.validate();
  if (static_cast<int>(values.size()) != grid.n_points)
    throw ParameterError("ComplexField: values length does not match grid");
}

QuadratureSpec QuadratureSpec::resolved(int m) const {
  QuadratureSpec q = *this;
  if (q.delta0 <= 0.0) q.delta0 = 0.5 / m;
  if (q.eta_max <= 0.0) q.eta_max = 40.0 / m;
  if (q.xi_max <= 0.0) q.xi_max = 40.0 / m;
  q.validate(m);
  return q;
}

void QuadratureSpec::validate(int m) const {
  if (m < 1) throw ParameterError("QuadratureSpec: m must be >= 1");
  if (!(delta0 > 0.0) || delta0 > 0.5 / m + 1e-15)
    throw ParameterError("QuadratureSpec: need 0 < delta0 <= 1/(2m)");
  if (!(eta_max > delta0) || !(xi_max > delta0))
    throw ParameterError("QuadratureSpec: truncations must exceed delta0");
  if (panels_per_decade < 1)
    throw ParameterError("QuadratureSpec: panels_per_decade must be >= 1");
  if (jacobi_order < 2 || filon_order < 2)
    throw ParameterError("QuadratureSpec: panel orders must be >= 2");
}

}  // namespace stratwave
