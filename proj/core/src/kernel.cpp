#include "stratwave/kernel.hpp"

namespace stratwave {

namespace {

// Delta_m applied to a profile of the single variable z, k-th z-derivative:
// d^k/dz^k (f'' - m^2 f)(z)
double delta_m_deriv(const ScalarProfile& f, int m, double z, int k) {
  const auto d = f.derivs(z);
  return d[k + 2] - static_cast<double>(m) * m * d[k];
}

}  // namespace

Complex g_kernel(const KernelContext& ctx, double eta, double xi, double y) {
  return g_kernel_dz(ctx, eta, xi, y, 0);
}

Complex g_kernel_dz(const KernelContext& ctx, double eta, double xi, double y,
                    int order) {
  if (order < 0 || order > 2) throw ParameterError("g_kernel_dz: order must be 0..2");
  const double z = xi + y - eta;
  const int m = ctx.params.m;
  const double rho_part = delta_m_deriv(ctx.data.rho0, m, z, order);
  const double omega_part = delta_m_deriv(ctx.data.omega0, m, z, order);
  return Complex(rho_part - xi / (ctx.params.beta * ctx.params.beta) * omega_part);
}

Complex g_kernel_deta(const KernelContext& ctx, double eta, double xi, double y,
                      int order) {
  if (order < 1 || order > 2) throw ParameterError("g_kernel_deta: order must be 1 or 2");
  const Complex dz = g_kernel_dz(ctx, eta, xi, y, order);
  return (order == 1) ? -dz : dz;
}

Complex h_source(const KernelContext& ctx, double z, double y0, double epsilon,
                 int sign) {
  if (sign != 1 && sign != -1) throw ParameterError("h_source: sign must be +-1");
  if (epsilon < 0.0) throw ParameterError("h_source: epsilon must be >= 0");
  const int m = ctx.params.m;
  const double b2 = ctx.params.beta * ctx.params.beta;
  const double rho_part = delta_m_deriv(ctx.data.rho0, m, z, 0);
  const Complex shift(z - y0, sign * epsilon);
  const auto w = ctx.data.omega0.derivs(z);
  const double dm_omega = w[2] - static_cast<double>(m) * m * w[0];
  return rho_part - (shift * dm_omega + 2.0 * w[1]) / b2;
}

}  // namespace stratwave
