#pragma once

#include <complex>
#include <vector>

#include "stratwave/dd.hpp"
#include "stratwave/errors.hpp"
#include "stratwave/types.hpp"

namespace stratwave::specfun {

// Gamma function on the complex plane, Lanczos approximation with reflection
// for Re z < 1/2. Throws ParameterError at the poles z = 0, -1, -2, ...
Complex complex_gamma(Complex z);

// Kummer confluent hypergeometric M(a,b,z) = sum_s (a)_s/((b)_s s!) z^s,
// summed to a relative tail below 1e-15. Callers must stay within |z| <= 60;
// the Whittaker asymptotic branch covers everything beyond.
Complex kummer_m(Complex a, Complex b, Complex zeta);

// Whittaker M_{0,+-gamma}(z) = e^{-z/2} z^{1/2 +- gamma} M(1/2 +- gamma, 1 +- 2 gamma, z),
// principal branch of the power. sign selects +gamma or -gamma.
Complex whittaker_m(Complex gamma, int sign, Complex zeta);

// Whittaker W_{0,gamma} and its first two derivatives, normalized so that
// W_{0,gamma}(z) ~ e^{-z/2} as z -> +infinity. Three evaluation regimes:
// a compensated connection-formula series, a Laplace-transform quadrature
// for moderate Re z (where the connection formula cancels catastrophically),
// and the large-z asymptotic series. The second derivative is computed from
// the differentiated series/quadrature, never from the ODE, so the ODE
// residual is a genuine cross-check.
Complex whittaker_w(Complex gamma, Complex zeta);
Complex whittaker_w_prime(Complex gamma, Complex zeta);
Complex whittaker_w_second(Complex gamma, Complex zeta);

// Modified Bessel functions for Re z > 0 (K) or any z off the cut (I).
Complex bessel_k0(Complex zeta);
Complex bessel_k1(Complex zeta);
Complex bessel_i0(Complex zeta);

// W(-eta + i eps) - W(-eta - i eps) for W(x) = W_{0,gamma}(2 m x), evaluated
// through the M-function continuation identities (never across the cut).
// Converges to 2 i cos(gamma pi) W(eta) as eps -> 0.
Complex continuation_jump(Complex gamma, double eta, double epsilon, int m);

struct WhittakerIndex {
  Complex gamma;
  bool is_degenerate = false;
};

WhittakerIndex make_whittaker_index(Complex gamma);

// Leading small-argument behavior of W_{0,gamma}: W = z^{1/2-gamma} E(z) in
// the nondegenerate case, W = z^{1/2}(E_1 - log z E_2) at gamma = 0. The
// envelope exponent 1/2 - mu drives the graded quadrature panels.
struct SmallArgExpansion {
  Complex exponent;
  bool has_log = false;
  double envelope_bound = 0.0;
};

SmallArgExpansion small_arg_expansion(Complex gamma);

// ---------------------------------------------------------------------------
// Branch decomposition of W_m(eta) = W_{0,gamma}(2 m eta) near eta = 0.
//
// Nondegenerate: W_m(eta) = sum_i eta^{p_i} Phi_i(eta) with p = 1/2 +- gamma
// and Phi_i entire. Degenerate: W_m(eta) = eta^{1/2}(Phi_1 - log(eta) Phi_2).
// The graded quadrature integrates each power (and log-power) against exact
// oscillatory moments, so it needs the analytic factors separately.

enum class WhittakerForm { value, value_over_arg, derivative };

struct SingularTerm {
  Complex exponent;
  int log_power = 0;  // 0 or 1
};

class SmallEtaDecomposition {
 public:
  SmallEtaDecomposition(Complex gamma, int m, WhittakerForm form);

  int parts() const { return static_cast<int>(terms_.size()); }
  const SingularTerm& term(int i) const { return terms_[i]; }
  // Phi_i(eta); analytic on [0, R) for R well beyond any split point
  Complex analytic_factor(int i, double eta) const;

 private:
  Complex gamma_;
  double two_m_;
  WhittakerForm form_;
  bool degenerate_;
  std::vector<SingularTerm> terms_;
  detail::Cdd coeff_plus_, coeff_minus_;  // A (2m)^{1/2+g}, B (2m)^{1/2-g}
};

namespace internal {
// Individual regimes, exposed for the overlap-agreement tests.
// order = 0, 1, 2 selects W, W', W''.
Complex whittaker_w_connection(Complex gamma, Complex zeta, int order);
Complex whittaker_w_laplace(Complex gamma, Complex zeta, int order);
Complex whittaker_w_asymptotic(Complex gamma, Complex zeta, int order);
Complex whittaker_w_k0form(Complex zeta, int order);  // gamma = 0
Complex whittaker_w_any(Complex gamma, Complex zeta, int order);

// regime boundaries
inline constexpr double kConnectionReMax = 6.0;
inline constexpr double kAsymptoticMin = 40.0;
inline constexpr double kDegeneracyThreshold = 1e-8;
inline constexpr double kBesselSeriesMax = 13.0;
}  // namespace internal

}  // namespace stratwave::specfun
