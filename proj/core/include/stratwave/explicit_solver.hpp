#pragma once

#include <array>
#include <memory>
#include <mutex>

#include "stratwave/oscquad.hpp"

namespace stratwave {

// All mode fields at one time on one grid. uy = i m psi by construction,
// ux = -dy psi through the W'-weighted formula (never finite differences).
struct SolutionSnapshot {
  double time = 0.0;
  ComplexField psi, rho, omega, ux, uy;
  double worst_error_estimate = 0.0;
};

// Piecewise-Chebyshev tabulation of the inner-integral family
// J_sign^{(k)}(c) (see InnerRule::kernel_integral). The c-support is finite:
// outside of it the data support and the xi half-line no longer intersect
// and J vanishes identically.
class KernelTable {
 public:
  KernelTable(const InnerRule& rule, const KernelContext& ctx, int sign, int k);
  Complex eval(double c) const;
  double peak() const { return peak_; }

 private:
  double c_lo_ = 0.0, c_hi_ = 0.0, panel_w_ = 0.5;
  int degree_ = 16;
  std::vector<std::vector<Complex>> cheb_;  // per panel, Chebyshev coefficients
  double peak_ = 0.0;
};

// Evaluates the closed-form solutions. Construction fixes (data, parameters,
// quadrature) and precomputes the xi-rule with its W values; snapshots and
// decay series then share all special-function work.
class SolutionEvaluator {
 public:
  SolutionEvaluator(const KernelContext& ctx, const QuadratureSpec& spec);

  const KernelContext& ctx() const { return ctx_; }
  const QuadratureSpec& spec() const { return spec_; }

  Complex psi(double t, double y) const;
  Complex rho(double t, double y) const;
  Complex dy_psi(double t, double y) const;
  Complex omega(double t, double y) const;

  SolutionSnapshot snapshot(double t, const GridSpec& grid) const;

  // one field on a grid; kind: 0 = psi, 1 = rho, 2 = dy_psi, 3 = omega
  ComplexField field(int kind, double t, const GridSpec& grid) const;

 private:
  struct TPrepared;

  const KernelTable& table(int sign, int k) const;
  std::shared_ptr<const TPrepared> prepared_for(double t) const;
  Complex phase(double t, double y) const;

  KernelContext ctx_;
  QuadratureSpec spec_;
  InnerRule rule_;
  OuterIntegrator integ_;
  Complex prefactor_;  // cos(gamma pi) / (2 m pi)

  mutable std::mutex mu_;
  mutable std::array<std::unique_ptr<KernelTable>, 6> tables_;  // [sign][k]
  mutable std::shared_ptr<const TPrepared> tcache_;
};

// --- spec-level operations (convenience wrappers over a fresh evaluator) ---

Complex stream_function(const KernelContext& ctx, double t, double y,
                        const QuadratureSpec& spec);
Complex density(const KernelContext& ctx, double t, double y,
                const QuadratureSpec& spec);
Complex dy_stream_function(const KernelContext& ctx, double t, double y,
                           const QuadratureSpec& spec);
Complex vorticity(const KernelContext& ctx, double t, double y,
                  const QuadratureSpec& spec);
SolutionSnapshot snapshot(const KernelContext& ctx, double t, const GridSpec& grid,
                          const QuadratureSpec& spec);

// residuals of the two evolution equations with a central time difference:
// r1 = (D_t + i m y) omega + i m beta^2 rho, r2 = (D_t + i m y) rho - i m psi
std::pair<Complex, Complex> pde_residual(const KernelContext& ctx, double t, double y,
                                         const QuadratureSpec& spec, double h_t);

}  // namespace stratwave
