#pragma once

#include <vector>

#include "stratwave/explicit_solver.hpp"
#include "stratwave/types.hpp"

namespace stratwave {

enum class Quantity { ux, uy, rho };

// L2-in-y norms of one mode quantity over time; times >= 1 (the decay
// theorems hold for t >= 1 and transients pollute the fit below that).
struct DecaySeries {
  std::vector<double> times;
  std::vector<double> norms;
  Quantity quantity = Quantity::ux;
};

struct DecayFit {
  double exponent = 0.0;   // norm ~ amplitude * t^{-exponent} (times log factor)
  double amplitude = 0.0;
  bool log_factor = false;
  double r_squared = 0.0;
};

// Trapezoid L2 norm; requires decay at the grid edges.
double mode_l2(const ComplexField& field);

DecaySeries decay_series(const KernelContext& ctx, Quantity quantity,
                         const std::vector<double>& times, const GridSpec& grid,
                         const QuadratureSpec& spec);

// Same series computed through an existing evaluator (shares tables).
DecaySeries decay_series(const SolutionEvaluator& ev, Quantity quantity,
                         const std::vector<double>& times, const GridSpec& grid);

// Least squares on log(norm): power model log a - alpha log t, and when
// try_log also log a - alpha log t + log(1 + log t); returns the model with
// the smaller residual. Needs >= 6 points spanning >= 1.5 decades.
DecayFit fit_decay(const DecaySeries& series, bool try_log);

}  // namespace stratwave
