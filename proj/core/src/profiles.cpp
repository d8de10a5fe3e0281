#include "stratwave/profiles.hpp"

#include <cmath>

namespace stratwave {

namespace {

// derivatives of exp(-u^2) in u
std::array<double, 5> gaussian_derivs(double u) {
  const double f = std::exp(-u * u);
  const double u2 = u * u;
  return {
      f,
      -2.0 * u * f,
      (4.0 * u2 - 2.0) * f,
      (12.0 * u - 8.0 * u2 * u) * f,
      (16.0 * u2 * u2 - 48.0 * u2 + 12.0) * f,
  };
}

// derivatives of exp(-1/(1-u^2)) on |u|<1, extended by zero
std::array<double, 5> bump_derivs(double u) {
  if (std::abs(u) >= 1.0) return {0.0, 0.0, 0.0, 0.0, 0.0};
  const double v = 1.0 - u * u;
  const double iv = 1.0 / v;
  const double iv2 = iv * iv, iv3 = iv2 * iv, iv4 = iv3 * iv, iv5 = iv4 * iv;
  const double u2 = u * u, u3 = u2 * u, u4 = u2 * u2;
  const double f = std::exp(-iv);
  // g = -1/v and its derivatives
  const double g1 = -2.0 * u * iv2;
  const double g2 = -2.0 * iv2 - 8.0 * u2 * iv3;
  const double g3 = -24.0 * u * iv3 - 48.0 * u3 * iv4;
  const double g4 = -24.0 * iv3 - 288.0 * u2 * iv4 - 384.0 * u4 * iv5;
  // Faa di Bruno for exp(g)
  const double d1 = g1 * f;
  const double d2 = (g2 + g1 * g1) * f;
  const double d3 = (g3 + 3.0 * g1 * g2 + g1 * g1 * g1) * f;
  const double d4 =
      (g4 + 4.0 * g1 * g3 + 3.0 * g2 * g2 + 6.0 * g1 * g1 * g2 + g1 * g1 * g1 * g1) * f;
  return {f, d1, d2, d3, d4};
}

// derivatives of sech^2(u)
std::array<double, 5> sech2_derivs(double u) {
  if (std::abs(u) > 360.0) return {0.0, 0.0, 0.0, 0.0, 0.0};
  const double s = 1.0 / std::cosh(u);
  const double T = std::tanh(u);
  const double s2 = s * s, s4 = s2 * s2, s6 = s4 * s2;
  const double T2 = T * T, T3 = T2 * T, T4 = T2 * T2;
  return {
      s2,
      -2.0 * s2 * T,
      4.0 * s2 * T2 - 2.0 * s4,
      -8.0 * s2 * T3 + 16.0 * s4 * T,
      16.0 * s2 * T4 - 88.0 * s4 * T2 + 16.0 * s6,
  };
}

}  // namespace

ScalarProfile::ScalarProfile(ProfileKind kind, double amplitude, double center,
                             double width)
    : kind_(kind), amplitude_(amplitude), center_(center), width_(width) {
  if (!(width > 0.0)) throw ParameterError("ScalarProfile: width must be positive");
}

std::array<double, 5> ScalarProfile::derivs(double y) const {
  if (is_zero()) return {0.0, 0.0, 0.0, 0.0, 0.0};
  const double u = (y - center_) / width_;
  std::array<double, 5> d;
  switch (kind_) {
    case ProfileKind::gaussian: d = gaussian_derivs(u); break;
    case ProfileKind::bump: d = bump_derivs(u); break;
    case ProfileKind::sech2: d = sech2_derivs(u); break;
    default: return {0.0, 0.0, 0.0, 0.0, 0.0};
  }
  double scale = amplitude_;
  for (auto& v : d) {
    v *= scale;
    scale /= width_;  // applies to the next derivative order
  }
  return d;
}

double ScalarProfile::deriv(int k, double y) const {
  if (k < 0 || k > 4) throw ParameterError("ScalarProfile: derivative order 0..4");
  return derivs(y)[k];
}

double ScalarProfile::support_radius() const {
  if (is_zero()) return 0.0;
  double r;
  switch (kind_) {
    case ProfileKind::gaussian: r = 9.0; break;
    case ProfileKind::bump: r = 1.0; break;
    case ProfileKind::sech2: r = 40.0; break;
    default: return 0.0;
  }
  return r * width_;
}

InitialDataProfile InitialDataProfile::scaled(double a) const {
  InitialDataProfile out = *this;
  if (!out.omega0.is_zero())
    out.omega0 = ScalarProfile(omega0.kind(), a * omega0.amplitude(), omega0.center(),
                               omega0.width());
  if (!out.rho0.is_zero())
    out.rho0 = ScalarProfile(rho0.kind(), a * rho0.amplitude(), rho0.center(),
                             rho0.width());
  return out;
}

void require_edge_decay(const InitialDataProfile& data, const GridSpec& grid,
                        double tol) {
  for (double y : {grid.y_min, grid.y_max}) {
    if (std::abs(data.omega0(y)) >= tol || std::abs(data.rho0(y)) >= tol)
      throw DomainTooSmallError("initial data does not decay below tolerance at grid edge");
  }
}

double sobolev_q(const InitialDataProfile& data, int j, const FlowParams& params,
                 const GridSpec& grid) {
  (void)params;
  if (j < 0 || j > 2) throw ParameterError("sobolev_q: j must be in 0..2");
  grid.validate();
  require_edge_decay(data, grid);

  const int order = 2 + j;
  const double h = grid.spacing();
  double sum_rho = 0.0, sum_omega = 0.0;
  for (int i = 0; i < grid.n_points; ++i) {
    const double y = grid.node(i);
    const double w = (i == 0 || i == grid.n_points - 1) ? 0.5 : 1.0;
    const auto dr = data.rho0.derivs(y);
    const auto dw = data.omega0.derivs(y);
    for (int k = 0; k <= order; ++k) {
      sum_rho += w * dr[k] * dr[k];
      sum_omega += w * dw[k] * dw[k];
    }
  }
  return std::sqrt(h * sum_rho) + std::sqrt(h * sum_omega);
}

}  // namespace stratwave
