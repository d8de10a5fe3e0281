#pragma once

#include <vector>

#include "stratwave/profiles.hpp"
#include "stratwave/types.hpp"

namespace stratwave {

// State of the method-of-lines integrator for the linearized system.
struct EvolState {
  ComplexField omega;
  ComplexField rho;
  double time = 0.0;
};

// Solves psi'' - m^2 psi = omega by a second-order centered tridiagonal
// scheme. The boundary closure is the exact-decay Robin condition
// psi' = -m psi at y_max and psi' = +m psi at y_min (exact for e^{-m|y|}),
// so the truncation bias is O(e^{-m width}) instead of O(1).
ComplexField elliptic_solve(const ComplexField& omega, int m);

// Right-hand side of the evolution system:
//   d_t omega = -i m y omega - i m beta^2 rho
//   d_t rho   = -i m y rho   + i m psi,  Delta_m psi = omega
void rhs(const EvolState& state, const FlowParams& params, ComplexField& d_omega,
         ComplexField& d_rho);

// Classical 4th-order one-step integration up to t_end with step dt;
// output_times must be ascending within [state0.time, t_end].
// Preconditions: dt <= 0.5/(m |y|_max) and m * t_end * spacing <= 0.3
// (otherwise phase mixing outruns the grid and a ResolutionError names the
// largest usable t_end).
std::vector<EvolState> integrate(const EvolState& state0, const FlowParams& params,
                                 double t_end, double dt,
                                 const std::vector<double>& output_times);

// initial state from closed-form data on a grid
EvolState initial_state(const InitialDataProfile& data, const FlowParams& params,
                        const GridSpec& grid);

// discrete energy bookkeeping: E = beta^2 ||rho||^2 + ||u||^2 and the
// Reynolds-stress production -2 Re <u^x, u^y> that the shear exchanges with
// the perturbation; dE/dt equals the production for the continuous system
double energy(const EvolState& state, const FlowParams& params);
double energy_production(const EvolState& state, const FlowParams& params);

}  // namespace stratwave
