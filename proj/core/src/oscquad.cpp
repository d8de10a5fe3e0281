#include "stratwave/oscquad.hpp"

#include <algorithm>
#include <cmath>

namespace stratwave {

namespace quadrule {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw ParameterError("gauss_legendre: n must be >= 1");
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int mhalf = (n + 1) / 2;
  for (int i = 0; i < mhalf; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

void spherical_bessel_j(double x, int nmax, std::vector<double>& j) {
  j.assign(nmax + 1, 0.0);
  const double ax = std::abs(x);
  auto parity_fix = [&]() {
    if (x < 0.0)
      for (int k = 1; k <= nmax; k += 2) j[k] = -j[k];
  };
  if (ax < 1e-5) {
    // j_k(x) = x^k/(2k+1)!! (1 - x^2/(2(2k+3)) + ...)
    double fact = 1.0, xp = 1.0;
    for (int k = 0; k <= nmax; ++k) {
      if (k > 0) {
        fact *= (2.0 * k + 1.0);
        xp *= ax;
      }
      j[k] = xp / fact * (1.0 - ax * ax / (2.0 * (2.0 * k + 3.0)));
    }
    parity_fix();
    return;
  }
  const double j0 = std::sin(ax) / ax;
  j[0] = j0;
  if (nmax == 0) { parity_fix(); return; }
  const double j1 = std::sin(ax) / (ax * ax) - std::cos(ax) / ax;
  j[1] = j1;
  if (ax > nmax + 10.0) {
    // upward recurrence is stable above the turning point
    for (int k = 1; k < nmax; ++k)
      j[k + 1] = (2.0 * k + 1.0) / ax * j[k] - j[k - 1];
  } else {
    // Miller's downward recurrence, normalized by j0
    const int start = nmax + 16 + static_cast<int>(ax);
    double jp = 0.0, jc = 1e-300;
    std::vector<double> tmp(nmax + 1, 0.0);
    for (int k = start; k >= 1; --k) {
      const double jm = (2.0 * k + 1.0) / ax * jc - jp;
      jp = jc;
      jc = jm;
      if (k - 1 <= nmax) tmp[k - 1] = jc;
      if (std::abs(jc) > 1e280) {  // rescale
        jp /= 1e280;
        jc /= 1e280;
        for (double& v : tmp) v /= 1e280;
      }
    }
    const double scale = j0 / jc;
    for (int k = 0; k <= nmax; ++k) j[k] = tmp[k] * scale;
  }
  parity_fix();
}

void legendre_osc_moments(double w, int nmax, std::vector<Complex>& mom) {
  std::vector<double> j;
  spherical_bessel_j(w, nmax, j);
  mom.assign(nmax + 1, Complex(0.0));
  Complex ik(1.0, 0.0);
  const Complex i_unit(0.0, 1.0);
  for (int k = 0; k <= nmax; ++k) {
    mom[k] = 2.0 * ik * j[k];
    ik *= i_unit;
  }
}

}  // namespace quadrule

namespace {

// Vandermonde solve on arbitrary distinct nodes (Bjorck-Pereyra):
// returns monomial coefficients of the interpolant through (u_j, f_j).
std::vector<Complex> vandermonde_coeffs(const std::vector<double>& u,
                                        std::vector<Complex> f) {
  const int n = static_cast<int>(u.size());
  for (int k = 0; k < n - 1; ++k)
    for (int j = n - 1; j > k; --j) f[j] = (f[j] - f[j - 1]) / (u[j] - u[j - k - 1]);
  // Newton -> monomial by synthetic multiplication
  std::vector<Complex> c(n, Complex(0.0));
  c[0] = f[n - 1];
  int deg = 0;
  for (int j = n - 2; j >= 0; --j) {
    for (int i = deg + 1; i >= 1; --i) c[i] = c[i - 1] - u[j] * c[i];
    c[0] = f[j] - u[j] * c[0];
    ++deg;
  }
  return c;
}

// int_0^1 u^{q} e^{i th u} du and int_0^1 u^{q} log(u) e^{i th u} du,
// |th| <= 1/4 so the exponential Taylor-expands in a few terms
void power_moments(Complex q, double theta, int kmax, std::vector<Complex>& mom,
                   std::vector<Complex>& mom_log) {
  mom.assign(kmax + 1, Complex(0.0));
  mom_log.assign(kmax + 1, Complex(0.0));
  const Complex ith(0.0, theta);
  for (int k = 0; k <= kmax; ++k) {
    Complex term(1.0, 0.0);
    Complex m(0.0), ml(0.0);
    for (int j = 0; j <= 20; ++j) {
      if (j > 0) term *= ith / static_cast<double>(j);
      const Complex d = q + static_cast<double>(k + j + 1);
      m += term / d;
      ml -= term / (d * d);
      if (std::abs(term) < 1e-20) break;
    }
    mom[k] = m;
    mom_log[k] = ml;
  }
}

double envelope_mu(const FlowParams& p) { return p.degenerate() ? 0.0 : p.mu; }

}  // namespace

PanelPlan make_panel_plan(const FlowParams& params, double t, const QuadratureSpec& spec_in) {
  const QuadratureSpec spec = spec_in.resolved(params.m);
  PanelPlan plan;
  plan.split_delta = std::min(1.0 / (4.0 * params.m * std::max(t, 1.0)), spec.delta0);
  const double alpha = 0.5 + envelope_mu(params);  // the W/eta envelope exponent
  plan.singular_panels.push_back({0.0, plan.split_delta, alpha});

  const double ratio = std::pow(10.0, 1.0 / spec.panels_per_decade);
  const double wmax = 1.2 / params.m;
  double a = plan.split_delta;
  while (a < spec.eta_max) {
    double b = std::min(a * ratio, a + wmax);
    b = std::min(b, spec.eta_max);
    if (spec.eta_max - b < 0.25 * wmax) b = spec.eta_max;
    plan.oscillatory_panels.push_back({a, b, static_cast<double>(params.m) * t});
    a = b;
  }
  return plan;
}

// ---------------------------------------------------------------------------
// InnerRule

InnerRule::InnerRule(const FlowParams& params, const QuadratureSpec& spec_in)
    : params_(params) {
  const QuadratureSpec spec = spec_in.resolved(params.m);
  std::vector<double> gx, gw;
  quadrule::gauss_legendre(spec.jacobi_order, gx, gw);

  const double mu = envelope_mu(params);
  // graded zone: tail of int_0^a xi^{1/2-mu} must stay below 1e-13
  const double cut = std::pow(1e-13, 1.0 / (1.5 - mu));
  const double ratio = std::pow(10.0, 1.0 / spec.panels_per_decade);
  std::vector<std::pair<double, double>> panels;
  double hi = spec.delta0;
  while (hi > cut) {
    const double lo = hi / ratio;
    panels.push_back({lo, hi});
    hi = lo;
  }
  // smooth zone out to the truncation
  const double wmax = 1.2 / params.m;
  double a = spec.delta0;
  while (a < spec.xi_max) {
    double b = std::min(a * 1.7, a + wmax);
    b = std::min(b, spec.xi_max);
    if (spec.xi_max - b < 0.25 * wmax) b = spec.xi_max;
    panels.push_back({a, b});
    a = b;
  }
  std::sort(panels.begin(), panels.end());

  nodes_.reserve(panels.size() * gx.size());
  for (const auto& [lo, hiB] : panels) {
    const double mid = 0.5 * (lo + hiB), hw = 0.5 * (hiB - lo);
    for (size_t i = 0; i < gx.size(); ++i) {
      nodes_.push_back(mid + hw * gx[i]);
      weights_.push_back(hw * gw[i]);
    }
  }
  wvals_.resize(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i)
    wvals_[i] = specfun::whittaker_w(params.gamma, Complex(2.0 * params.m * nodes_[i]));
}

Complex InnerRule::kernel_integral(const KernelContext& ctx, int sign, int deriv_order,
                                   double c) const {
  if (sign != 1 && sign != -1) throw ParameterError("kernel_integral: sign must be +-1");
  if (deriv_order < 0 || deriv_order > 2)
    throw ParameterError("kernel_integral: deriv_order must be 0..2");
  const int m = ctx.params.m;
  const double m2 = static_cast<double>(m) * m;
  const double inv_b2 = 1.0 / (ctx.params.beta * ctx.params.beta);
  const ScalarProfile& rho = ctx.data.rho0;
  const ScalarProfile& omg = ctx.data.omega0;

  // support window in xi
  const double reach = std::max(
      rho.is_zero() ? 0.0 : rho.support_radius(),
      omg.is_zero() ? 0.0 : omg.support_radius());
  const double rc = std::max(std::abs(rho.center()), std::abs(omg.center()));
  double lo_z = -reach - rc, hi_z = reach + rc;
  double lo_xi, hi_xi;
  if (sign > 0) {  // z = xi + c
    lo_xi = lo_z - c;
    hi_xi = hi_z - c;
  } else {  // z = c - xi
    lo_xi = c - hi_z;
    hi_xi = c - lo_z;
  }
  auto lo_it = std::lower_bound(nodes_.begin(), nodes_.end(), lo_xi);
  auto hi_it = std::upper_bound(nodes_.begin(), nodes_.end(), hi_xi);

  Complex acc(0.0);
  const int k = deriv_order;
  for (auto it = lo_it; it != hi_it; ++it) {
    const size_t i = static_cast<size_t>(it - nodes_.begin());
    const double xi = nodes_[i];
    const double z = (sign > 0) ? xi + c : c - xi;
    double fval = 0.0;
    if (!rho.is_zero()) {
      const auto d = rho.derivs(z);
      fval = d[k + 2] - m2 * d[k];
    }
    double gval = 0.0;
    if (!omg.is_zero()) {
      const auto d = omg.derivs(z);
      gval = -inv_b2 * (d[k + 2] - m2 * d[k]);
    }
    const double kernel = fval + sign * xi * gval;
    acc += weights_[i] * wvals_[i] * kernel;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// OuterIntegrator

OuterIntegrator::OuterIntegrator(const FlowParams& params, const QuadratureSpec& spec)
    : params_(params), spec_(spec.resolved(params.m)) {
  n_filon_ = spec_.filon_order;
  n_sing_ = std::min(spec_.jacobi_order, 11);
  quadrule::gauss_legendre(n_filon_, gl_x_, gl_w_);
  legendre_.assign(n_filon_, std::vector<double>(n_filon_, 0.0));
  for (int j = 0; j < n_filon_; ++j) {
    double p0 = 1.0, p1 = 0.0;
    const double s = gl_x_[j];
    for (int k = 0; k < n_filon_; ++k) {
      legendre_[k][j] = p0;
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * s * p1 - k * p2) / (k + 1.0);
    }
  }
}

OuterIntegrator::Prepared OuterIntegrator::prepare(OuterWeight weight, double t,
                                                   int phase_sign) const {
  if (phase_sign != 1 && phase_sign != -1)
    throw ParameterError("outer_oscillatory: phase_sign must be +-1");
  if (!(t >= 0.0)) throw ParameterError("outer_oscillatory: t must be >= 0");
  const double coshg = std::abs(std::cos(M_PI * params_.gamma));
  if (coshg > 1e12)
    throw ParameterError("outer_oscillatory: |cos(gamma pi)| beyond overflow guard");

  Prepared prep;
  prep.lambda = phase_sign * params_.m * t;
  const PanelPlan plan = make_panel_plan(params_, t, spec_);
  prep.delta = plan.split_delta;
  prep.log_delta = std::log(prep.delta);

  // --- singular zone: Chebyshev-Lobatto samples on [0, delta]
  const int ns = n_sing_;
  prep.cheb_eta.resize(ns + 1);
  for (int j = 0; j <= ns; ++j)
    prep.cheb_eta[j] = prep.delta * 0.5 * (1.0 - std::cos(M_PI * j / ns));

  const specfun::WhittakerForm form =
      weight == OuterWeight::W ? specfun::WhittakerForm::value
      : weight == OuterWeight::W_over_eta ? specfun::WhittakerForm::value_over_arg
                                          : specfun::WhittakerForm::derivative;
  specfun::SmallEtaDecomposition dec(params_.gamma, params_.m, form);
  const double theta = prep.lambda * prep.delta;
  for (int i = 0; i < dec.parts(); ++i) {
    Prepared::SingularPart part;
    part.exponent = dec.term(i).exponent;
    part.log_power = dec.term(i).log_power;
    part.phi.resize(ns + 1);
    for (int j = 0; j <= ns; ++j)
      part.phi[j] = dec.analytic_factor(i, prep.cheb_eta[j]);
    part.delta_pow = std::exp((part.exponent + 1.0) * prep.log_delta);
    power_moments(part.exponent, theta, ns, part.mom, part.mom_log);
    prep.parts.push_back(std::move(part));
  }

  // --- oscillatory panels
  const int m = params_.m;
  const double two_m = 2.0 * m;
  for (const auto& p : plan.oscillatory_panels) {
    Prepared::Panel panel;
    panel.mid = 0.5 * (p.a + p.b);
    panel.hw = 0.5 * (p.b - p.a);
    panel.phase_mid = std::exp(Complex(0.0, prep.lambda * panel.mid));
    panel.eta.resize(n_filon_);
    panel.wvals.resize(n_filon_);
    for (int j = 0; j < n_filon_; ++j) {
      const double eta = panel.mid + panel.hw * gl_x_[j];
      panel.eta[j] = eta;
      const Complex zz(two_m * eta);
      switch (weight) {
        case OuterWeight::W:
          panel.wvals[j] = specfun::whittaker_w(params_.gamma, zz);
          break;
        case OuterWeight::W_over_eta:
          panel.wvals[j] = specfun::whittaker_w(params_.gamma, zz) / eta;
          break;
        case OuterWeight::W_prime:
          panel.wvals[j] = two_m * specfun::whittaker_w_prime(params_.gamma, zz);
          break;
      }
    }
    quadrule::legendre_osc_moments(prep.lambda * panel.hw, n_filon_ - 1, panel.moments);
    prep.panels.push_back(std::move(panel));
  }
  return prep;
}

OuterIntegrator::Result OuterIntegrator::apply(
    const Prepared& prep, const std::function<Complex(double)>& inner) const {
  Result res;
  // singular zone
  const int ns = n_sing_;
  std::vector<Complex> inner_vals(ns + 1);
  for (int j = 0; j <= ns; ++j) inner_vals[j] = inner(prep.cheb_eta[j]);
  std::vector<double> u(ns + 1);
  for (int j = 0; j <= ns; ++j)
    u[j] = prep.delta > 0.0 ? prep.cheb_eta[j] / prep.delta : 0.0;
  for (const auto& part : prep.parts) {
    std::vector<Complex> f(ns + 1);
    for (int j = 0; j <= ns; ++j) f[j] = part.phi[j] * inner_vals[j];
    const std::vector<Complex> coef = vandermonde_coeffs(u, std::move(f));
    Complex acc(0.0);
    for (int k = 0; k <= ns; ++k) {
      Complex mk = part.mom[k];
      if (part.log_power == 1) mk = prep.log_delta * mk + part.mom_log[k];
      acc += coef[k] * mk;
    }
    res.value += part.delta_pow * acc;
    // tail estimate from the top interpolation coefficients
    res.error_estimate += std::abs(part.delta_pow) *
                          (std::abs(coef[ns]) + std::abs(coef[ns - 1])) * 0.25 /
                          (std::abs(part.exponent.real()) + 1.0);
  }
  // oscillatory panels
  const int n = n_filon_;
  std::vector<Complex> amp(n), chat(n);
  for (const auto& panel : prep.panels) {
    for (int j = 0; j < n; ++j) amp[j] = panel.wvals[j] * inner(panel.eta[j]);
    for (int k = 0; k < n; ++k) {
      Complex s(0.0);
      for (int j = 0; j < n; ++j) s += gl_w_[j] * legendre_[k][j] * amp[j];
      chat[k] = (2.0 * k + 1.0) * 0.5 * s;
    }
    Complex acc(0.0);
    for (int k = 0; k < n; ++k) acc += chat[k] * panel.moments[k];
    res.value += panel.hw * panel.phase_mid * acc;
    res.error_estimate +=
        panel.hw * 2.0 * (std::abs(chat[n - 1]) + std::abs(chat[n - 2]));
  }
  return res;
}

// ---------------------------------------------------------------------------
// spec-level operations

namespace {

Complex inner_integral_once(const KernelContext& ctx, double eta, double y, int sign,
                            const QuadratureSpec& spec) {
  InnerRule rule(ctx.params, spec);
  const double c = (sign > 0) ? y - eta : y + eta;
  return rule.kernel_integral(ctx, sign, 0, c);
}

}  // namespace

Complex inner_integral(const KernelContext& ctx, double eta, double y, int sign,
                       const QuadratureSpec& spec_in) {
  if (!(eta >= 0.0)) throw ParameterError("inner_integral: eta must be >= 0");
  const QuadratureSpec spec = spec_in.resolved(ctx.params.m);
  const Complex coarse = inner_integral_once(ctx, eta, y, sign, spec);
  QuadratureSpec fine = spec;
  fine.jacobi_order += 4;
  fine.panels_per_decade += 2;
  const Complex refined = inner_integral_once(ctx, eta, y, sign, fine);
  const double scale = std::max(std::abs(refined), 1e-280);
  const double rel = std::abs(refined - coarse) / scale;
  if (rel > 1e-9 && std::abs(refined) > 1e-270)
    throw ToleranceError("inner_integral: refinement estimate above tolerance", 1e-9, rel);
  return refined;
}

Complex outer_oscillatory(const KernelContext& ctx, double t, double y,
                          OuterWeight weight, int phase_sign, int arg_sign,
                          const QuadratureSpec& spec_in, int inner_deriv) {
  if (arg_sign != 1 && arg_sign != -1)
    throw ParameterError("outer_oscillatory: arg_sign must be +-1");
  const QuadratureSpec spec = spec_in.resolved(ctx.params.m);
  if (ctx.data.is_zero()) return Complex(0.0);
  OuterIntegrator integ(ctx.params, spec);
  InnerRule rule(ctx.params, spec);
  auto inner = [&](double eta) {
    const double c = (arg_sign > 0) ? y - eta : y + eta;
    return rule.kernel_integral(ctx, arg_sign, inner_deriv, c);
  };
  const auto prep = integ.prepare(weight, t, phase_sign);
  const auto res = integ.apply(prep, inner);
  const double scale = std::max(std::abs(res.value), 1e-250);
  if (res.error_estimate / scale > 1e-7 && std::abs(res.value) > 1e-240)
    throw ToleranceError("outer_oscillatory: estimate above tolerance", 1e-7,
                         res.error_estimate / scale);
  return res.value;
}

}  // namespace stratwave
