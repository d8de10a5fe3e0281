#pragma once

#include <complex>
#include <vector>

#include "stratwave/errors.hpp"

namespace stratwave {

using Complex = std::complex<double>;

// Physical and spectral parameters of one Fourier mode: buoyancy frequency
// beta, x-wavenumber m, and the index gamma = sqrt(1/4 - beta^2) (principal
// branch) that selects the Whittaker functions W_{0,gamma}.
struct FlowParams {
  double beta = 0.0;
  int m = 0;
  Complex gamma;
  double mu = 0.0;  // Re gamma
  double nu = 0.0;  // Im gamma

  bool degenerate() const { return std::abs(gamma) < 1e-8; }
};

// gamma is real for beta^2 < 1/4, zero at beta^2 = 1/4, purely imaginary
// for beta^2 > 1/4. Throws ParameterError for beta <= 0 or m < 1.
FlowParams derive_params(double beta, int m);

// Uniform grid on a symmetric truncation of the real line.
struct GridSpec {
  double y_min = -20.0;
  double y_max = 20.0;
  int n_points = 2049;

  double spacing() const { return (y_max - y_min) / (n_points - 1); }
  double node(int j) const { return y_min + j * spacing(); }
  void validate() const;

  static GridSpec standard() { return GridSpec{}; }
};

// A complex-valued function of y sampled on a grid, tagged with its time.
struct ComplexField {
  GridSpec grid;
  std::vector<Complex> values;
  double time = 0.0;

  ComplexField() = default;
  ComplexField(const GridSpec& g, double t = 0.0)
      : grid(g), values(g.n_points, Complex(0.0)), time(t) {}

  int size() const { return static_cast<int>(values.size()); }
  void validate() const;
};

// Truncation, grading, split-point and panel-order parameters for the
// singular oscillatory integrals.
struct QuadratureSpec {
  double eta_max = 0.0;   // outer truncation; 0 means derive from m
  double xi_max = 0.0;    // inner truncation; 0 means derive from m
  double delta0 = 0.0;    // fixed split, 0 means 1/(2m)
  int panels_per_decade = 4;
  int jacobi_order = 12;  // nodes on endpoint-singular panels
  int filon_order = 14;   // nodes on oscillatory panels

  // Resolve the defaults for wavenumber m. |W_{0,gamma}(2 m x)| ~ e^{-m x}
  // drops below 1e-16 around m x = 40, hence the 40/m truncations.
  QuadratureSpec resolved(int m) const;
  void validate(int m) const;
};

}  // namespace stratwave
