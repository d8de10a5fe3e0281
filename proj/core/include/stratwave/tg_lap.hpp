#pragma once

#include <vector>

#include "stratwave/kernel.hpp"
#include "stratwave/types.hpp"

namespace stratwave {

// Point on the spectral line with the +-i eps regularization of the
// resolvent; eps > 0 always, the eps -> 0 limit enters only through the
// continuation-jump identity.
struct SpectralPoint {
  double y0 = 0.0;
  double epsilon = 0.0;
  int sign = +1;

  void validate() const {
    if (!(epsilon > 0.0)) throw ParameterError("SpectralPoint: epsilon must be > 0");
    if (sign != 1 && sign != -1) throw ParameterError("SpectralPoint: sign must be +-1");
  }
};

// Green's function of the regularized Taylor-Goldstein operator:
//   G(y, y0, z) = -(1/2m) W(y0-z -+ i eps) W(y-y0 +- i eps)   for y >= z
// and the mirrored product for y <= z, with W(x) = W_{0,gamma}(2 m x).
Complex greens_function(const FlowParams& params, const SpectralPoint& pt, double y,
                        double z);

// psi^{+-}(y,y0) = (1/b^2)(y-y0 +- i eps) omega0(y) - rho0(y) + int G H dz
Complex generalized_stream(const KernelContext& ctx, const SpectralPoint& pt, double y,
                           const QuadratureSpec& quad);

// rho^{+-}(y,y0) = omega0(y)/b^2 + (y-y0 +- i eps)^{-1} int G H dz
Complex generalized_density(const KernelContext& ctx, const SpectralPoint& pt, double y,
                            const QuadratureSpec& quad);

// LHS - RHS of the inhomogeneous Taylor-Goldstein equation, Delta_m by
// central second differences of generalized_stream with step h <= eps/10.
Complex tg_residual(const KernelContext& ctx, const SpectralPoint& pt, double y,
                    const QuadratureSpec& quad, double h);

// t = 0 limiting-absorption reconstruction: integrates
// (psi^- - psi^+)/(2 pi i) over y0 for each eps in the (descending) sequence,
// Richardson-extrapolates linearly in eps, and returns the reconstructed
// stream-function. Throws ConvergenceError when the extrapolants stall.
ComplexField lap_reconstruct_t0(const KernelContext& ctx, const GridSpec& grid,
                                const std::vector<double>& eps_sequence,
                                const QuadratureSpec& quad);

}  // namespace stratwave
