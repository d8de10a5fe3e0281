#pragma once

#include "stratwave/profiles.hpp"
#include "stratwave/types.hpp"

namespace stratwave {

// Pairs the mode parameters with the initial data that seeds the source
// kernel G_m and the spectral source H.
struct KernelContext {
  FlowParams params;
  InitialDataProfile data;

  KernelContext(const FlowParams& p, const InitialDataProfile& d) : params(p), data(d) {
    if (!(p.beta > 0.0)) throw ParameterError("KernelContext: beta must be positive");
  }
};

// G_m(eta, xi, y) = Delta_m(rho0 - (xi/beta^2) omega0) evaluated at the
// composite argument z = xi + y - eta; Delta_m acts through z alone, which is
// the reading consistent with the translation identity (d_eta + d_y) G = 0.
// g_kernel_dz gives the pure z-derivatives; d_eta = -d/dz, d_y = +d/dz.
Complex g_kernel(const KernelContext& ctx, double eta, double xi, double y);
Complex g_kernel_dz(const KernelContext& ctx, double eta, double xi, double y, int order);
Complex g_kernel_deta(const KernelContext& ctx, double eta, double xi, double y, int order);

// H^{+-}_{m,eps}(z, y0) = Delta_m rho0(z) - (1/beta^2) Delta_m((z - y0 +- i eps) omega0(z)),
// the second Delta_m expanded as (z - y0 +- i eps)(omega0'' - m^2 omega0) + 2 omega0'.
Complex h_source(const KernelContext& ctx, double z, double y0, double epsilon, int sign);

}  // namespace stratwave
