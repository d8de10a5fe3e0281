#include "stratwave/reference_solver.hpp"

#include <cmath>
#include <string>

namespace stratwave {

ComplexField elliptic_solve(const ComplexField& omega, int m) {
  if (m < 1) throw ParameterError("elliptic_solve: m must be >= 1");
  omega.validate();
  const GridSpec& g = omega.grid;
  const int n = g.n_points;
  const double h = g.spacing();
  const double m2 = static_cast<double>(m) * m;

  // tridiagonal rows: (1/h^2) psi_{j-1} - (2/h^2 + m^2) psi_j + (1/h^2) psi_{j+1} = w_j
  // Robin closure via ghost elimination:
  //   at j = 0:    psi_{-1} = psi_1 - 2 h m psi_0
  //   at j = n-1:  psi_n    = psi_{n-2} - 2 h m psi_{n-1}
  std::vector<double> a(n, 1.0 / (h * h));   // sub
  std::vector<double> b(n, -2.0 / (h * h) - m2);  // diag
  std::vector<double> c(n, 1.0 / (h * h));   // super
  std::vector<Complex> d = omega.values;

  b[0] = -2.0 / (h * h) - m2 - 2.0 * m / h;
  c[0] = 2.0 / (h * h);
  a[n - 1] = 2.0 / (h * h);
  b[n - 1] = -2.0 / (h * h) - m2 - 2.0 * m / h;

  // Thomas algorithm
  std::vector<double> cp(n);
  std::vector<Complex> dp(n);
  cp[0] = c[0] / b[0];
  dp[0] = d[0] / b[0];
  for (int j = 1; j < n; ++j) {
    const double denom = b[j] - a[j] * cp[j - 1];
    cp[j] = c[j] / denom;
    dp[j] = (d[j] - a[j] * dp[j - 1]) / denom;
  }
  ComplexField psi(g, omega.time);
  psi.values[n - 1] = dp[n - 1];
  for (int j = n - 2; j >= 0; --j) psi.values[j] = dp[j] - cp[j] * psi.values[j + 1];
  return psi;
}

void rhs(const EvolState& state, const FlowParams& params, ComplexField& d_omega,
         ComplexField& d_rho) {
  const GridSpec& g = state.omega.grid;
  const ComplexField psi = elliptic_solve(state.omega, params.m);
  d_omega = ComplexField(g, state.time);
  d_rho = ComplexField(g, state.time);
  const Complex i_unit(0.0, 1.0);
  const double m = params.m;
  const double b2 = params.beta * params.beta;
  for (int j = 0; j < g.n_points; ++j) {
    const double y = g.node(j);
    d_omega.values[j] = -i_unit * m * (y * state.omega.values[j] + b2 * state.rho.values[j]);
    d_rho.values[j] = -i_unit * m * (y * state.rho.values[j] - psi.values[j]);
  }
}

namespace {

EvolState axpy_state(const EvolState& s, double a, const ComplexField& ko,
                     const ComplexField& kr) {
  EvolState out = s;
  for (size_t j = 0; j < out.omega.values.size(); ++j) {
    out.omega.values[j] += a * ko.values[j];
    out.rho.values[j] += a * kr.values[j];
  }
  out.time = s.time + a;
  return out;
}

}  // namespace

std::vector<EvolState> integrate(const EvolState& state0, const FlowParams& params,
                                 double t_end, double dt,
                                 const std::vector<double>& output_times) {
  state0.omega.validate();
  state0.rho.validate();
  const GridSpec& g = state0.omega.grid;
  const double ymax = std::max(std::abs(g.y_min), std::abs(g.y_max));
  if (!(dt > 0.0) || dt > 0.5 / (params.m * ymax))
    throw ParameterError("integrate: dt must satisfy dt <= 0.5/(m |y|_max)");
  const double mix = params.m * t_end * g.spacing();
  if (mix > 0.3)
    throw ResolutionError(
        "integrate: phase mixing unresolved, largest usable t_end on this grid is " +
        std::to_string(0.3 / (params.m * g.spacing())));

  std::vector<EvolState> out;
  EvolState s = state0;
  size_t next_out = 0;
  auto maybe_emit = [&](const EvolState& st) {
    while (next_out < output_times.size() &&
           st.time >= output_times[next_out] - 1e-12) {
      out.push_back(st);
      out.back().time = st.time;
      ++next_out;
    }
  };
  maybe_emit(s);

  ComplexField k1o, k1r, k2o, k2r, k3o, k3r, k4o, k4r;
  while (s.time < t_end - 1e-12) {
    double step = dt;
    if (next_out < output_times.size())
      step = std::min(step, output_times[next_out] - s.time);
    step = std::min(step, t_end - s.time);

    rhs(s, params, k1o, k1r);
    EvolState s2 = axpy_state(s, 0.5 * step, k1o, k1r);
    rhs(s2, params, k2o, k2r);
    EvolState s3 = axpy_state(s, 0.5 * step, k2o, k2r);
    rhs(s3, params, k3o, k3r);
    EvolState s4 = axpy_state(s, step, k3o, k3r);
    rhs(s4, params, k4o, k4r);

    for (int j = 0; j < g.n_points; ++j) {
      s.omega.values[j] += step / 6.0 *
                           (k1o.values[j] + 2.0 * k2o.values[j] + 2.0 * k3o.values[j] +
                            k4o.values[j]);
      s.rho.values[j] += step / 6.0 *
                         (k1r.values[j] + 2.0 * k2r.values[j] + 2.0 * k3r.values[j] +
                          k4r.values[j]);
    }
    s.time += step;
    s.omega.time = s.rho.time = s.time;
    maybe_emit(s);
  }
  return out;
}

EvolState initial_state(const InitialDataProfile& data, const FlowParams& params,
                        const GridSpec& grid) {
  (void)params;
  grid.validate();
  EvolState s;
  s.omega = ComplexField(grid, 0.0);
  s.rho = ComplexField(grid, 0.0);
  for (int j = 0; j < grid.n_points; ++j) {
    const double y = grid.node(j);
    s.omega.values[j] = data.omega0(y);
    s.rho.values[j] = data.rho0(y);
  }
  return s;
}

namespace {

double trapz_weight(int j, int n) { return (j == 0 || j == n - 1) ? 0.5 : 1.0; }

}  // namespace

double energy(const EvolState& state, const FlowParams& params) {
  const GridSpec& g = state.omega.grid;
  const double h = g.spacing();
  const ComplexField psi = elliptic_solve(state.omega, params.m);
  const double b2 = params.beta * params.beta;
  double acc = 0.0;
  for (int j = 0; j < g.n_points; ++j) {
    const double w = trapz_weight(j, g.n_points);
    // |u|^2 integrates to -Re(psi conj(omega)) after parts
    acc += w * (b2 * std::norm(state.rho.values[j]) -
                (psi.values[j] * std::conj(state.omega.values[j])).real());
  }
  return h * acc;
}

double energy_production(const EvolState& state, const FlowParams& params) {
  const GridSpec& g = state.omega.grid;
  const double h = g.spacing();
  const ComplexField psi = elliptic_solve(state.omega, params.m);
  const Complex i_unit(0.0, 1.0);
  double acc = 0.0;
  for (int j = 0; j < g.n_points; ++j) {
    const double w = trapz_weight(j, g.n_points);
    // u^x = -d_y psi (centered), u^y = i m psi
    const int jm = std::max(j - 1, 0), jp = std::min(j + 1, g.n_points - 1);
    const Complex ux = -(psi.values[jp] - psi.values[jm]) / ((jp - jm) * h);
    const Complex uy = i_unit * static_cast<double>(params.m) * psi.values[j];
    acc += w * (ux * std::conj(uy)).real();
  }
  return -2.0 * h * acc;
}

}  // namespace stratwave
