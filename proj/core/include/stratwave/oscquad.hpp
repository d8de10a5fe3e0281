#pragma once

#include <functional>
#include <vector>

#include "stratwave/kernel.hpp"
#include "stratwave/specfun.hpp"
#include "stratwave/types.hpp"

namespace stratwave {

// Weight of the outer eta-integral: W(eta) for the stream-function, W(eta)/eta
// for the density, W'(eta) for dy psi. W(x) = W_{0,gamma}(2 m x) throughout.
enum class OuterWeight { W, W_over_eta, W_prime };

// Partition of (0, eta_max] into a t-dependent singular zone (0, delta] and
// oscillatory panels, mirroring the stationary-phase split delta = 1/(4 m t).
struct PanelPlan {
  double split_delta = 0.0;
  struct SingularPanel { double a, b; double alpha; };
  struct OscPanel { double a, b; double freq; };
  std::vector<SingularPanel> singular_panels;
  std::vector<OscPanel> oscillatory_panels;
};

PanelPlan make_panel_plan(const FlowParams& params, double t, const QuadratureSpec& spec);

namespace quadrule {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// j_0..j_nmax at x (any real x; odd orders flip sign for x < 0).
void spherical_bessel_j(double x, int nmax, std::vector<double>& j);

// int_{-1}^{1} P_k(s) e^{i w s} ds = 2 i^k j_k(w) for k = 0..nmax.
void legendre_osc_moments(double w, int nmax, std::vector<Complex>& mom);

}  // namespace quadrule

// Quadrature rule for the inner xi-integrals int_0^inf W(xi) G(...) dxi:
// geometrically graded panels resolve the xi^{1/2-mu} envelope of W near 0,
// smooth panels follow out to the truncation where |W| < 1e-16. Nodes,
// weights and the (expensive) W values are fixed once per (params, spec).
class InnerRule {
 public:
  InnerRule(const FlowParams& params, const QuadratureSpec& spec);

  // J_sign^{(k)}(c):
  //   sign=+1:  int_0^inf W(xi) [f^{(k)}(xi+c) + xi g^{(k)}(xi+c)] dxi
  //   sign=-1:  int_0^inf W(xi) [f^{(k)}(c-xi) - xi g^{(k)}(c-xi)] dxi
  // with f = Delta_m rho0, g = -(1/beta^2) Delta_m omega0 as functions of z.
  // G_m(eta,xi,y) = f + xi g at z = xi+y-eta, so the inner integral of the
  // plus branch is J_+(y-eta) and of the reflected branch J_-(y+eta).
  Complex kernel_integral(const KernelContext& ctx, int sign, int deriv_order,
                          double c) const;

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const FlowParams& params() const { return params_; }

 private:
  FlowParams params_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<Complex> wvals_;  // W_{0,gamma}(2 m xi_i)
};

// Outer integral engine. prepare() bakes everything independent of the
// inner amplitude (panel layout, W values at nodes, oscillatory moments,
// singular-zone analytic factors). apply() then needs only inner-integral
// values, so sweeping a y-grid at fixed t reuses all special-function work.
class OuterIntegrator {
 public:
  OuterIntegrator(const FlowParams& params, const QuadratureSpec& spec);

  struct Result {
    Complex value;
    double error_estimate = 0.0;  // absolute, from interpolation-coefficient tails
  };

  struct Prepared {
    double lambda = 0.0;  // phase_sign * m * t
    // singular zone
    double delta = 0.0;
    std::vector<double> cheb_eta;  // sample points in [0, delta]
    struct SingularPart {
      Complex exponent;
      int log_power;
      std::vector<Complex> phi;        // analytic factor at cheb_eta
      Complex delta_pow;               // delta^{exponent+1}
      std::vector<Complex> mom;        // int_0^1 u^{p+k} e^{i th u} du
      std::vector<Complex> mom_log;    // int_0^1 u^{p+k} log u e^{i th u} du
    };
    std::vector<SingularPart> parts;
    double log_delta = 0.0;
    // oscillatory panels
    struct Panel {
      double mid, hw;
      Complex phase_mid;               // e^{i lambda mid}
      std::vector<double> eta;         // GL nodes mapped to [a,b]
      std::vector<Complex> wvals;      // weight function at nodes
      std::vector<Complex> moments;    // 2 i^k j_k(lambda hw)
    };
    std::vector<Panel> panels;
  };

  Prepared prepare(OuterWeight weight, double t, int phase_sign) const;
  Result apply(const Prepared& prep,
               const std::function<Complex(double)>& inner) const;

  const QuadratureSpec& spec() const { return spec_; }
  const FlowParams& params() const { return params_; }

 private:
  FlowParams params_;
  QuadratureSpec spec_;
  int n_filon_;
  int n_sing_;
  std::vector<double> gl_x_, gl_w_;            // filon order
  std::vector<std::vector<double>> legendre_;  // P_k(s_j), k x j
};

// --- spec-level operations -------------------------------------------------

// int_0^{xi_max} W(xi) G_m(sign eta, sign xi, y) dxi with a panel-doubling
// error estimate; throws ToleranceError when the 1e-9 relative target fails.
Complex inner_integral(const KernelContext& ctx, double eta, double y, int sign,
                       const QuadratureSpec& spec);

// int_0^{eta_max} e^{i phase_sign m eta t} w(eta) * inner(eta; arg_sign) deta.
Complex outer_oscillatory(const KernelContext& ctx, double t, double y,
                          OuterWeight weight, int phase_sign, int arg_sign,
                          const QuadratureSpec& spec, int inner_deriv = 0);

}  // namespace stratwave
