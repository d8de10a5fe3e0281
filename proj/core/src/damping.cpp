#include "stratwave/damping.hpp"

#include <algorithm>
#include <cmath>

namespace stratwave {

double mode_l2(const ComplexField& field) {
  field.validate();
  const int n = field.grid.n_points;
  double peak = 0.0;
  for (const auto& v : field.values) peak = std::max(peak, std::abs(v));
  const double edge =
      std::max(std::abs(field.values.front()), std::abs(field.values.back()));
  if (edge > std::max(1e-10, 1e-6 * peak))
    throw DomainTooSmallError("mode_l2: field does not decay at the grid edges");
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    acc += w * std::norm(field.values[j]);
  }
  return std::sqrt(field.grid.spacing() * acc);
}

DecaySeries decay_series(const SolutionEvaluator& ev, Quantity quantity,
                         const std::vector<double>& times, const GridSpec& grid) {
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 1.0)
      throw ParameterError("decay_series: times must lie in [1, inf)");
    if (i > 0 && times[i] <= times[i - 1])
      throw ParameterError("decay_series: times must be ascending");
  }
  DecaySeries out;
  out.quantity = quantity;
  out.times = times;
  out.norms.reserve(times.size());
  const int m = ev.ctx().params.m;
  for (double t : times) {
    double norm = 0.0;
    switch (quantity) {
      case Quantity::ux:
        norm = mode_l2(ev.field(2, t, grid));  // |u^x| = |dy psi|
        break;
      case Quantity::uy:
        norm = m * mode_l2(ev.field(0, t, grid));  // u^y = i m psi
        break;
      case Quantity::rho:
        norm = mode_l2(ev.field(1, t, grid));
        break;
    }
    out.norms.push_back(norm);
  }
  return out;
}

DecaySeries decay_series(const KernelContext& ctx, Quantity quantity,
                         const std::vector<double>& times, const GridSpec& grid,
                         const QuadratureSpec& spec) {
  SolutionEvaluator ev(ctx, spec);
  return decay_series(ev, quantity, times, grid);
}

namespace {

struct LinFit {
  double intercept, slope, ssr;
};

// least squares of y against {1, x}
LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  LinFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  f.ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    f.ssr += r * r;
  }
  return f;
}

}  // namespace

DecayFit fit_decay(const DecaySeries& series, bool try_log) {
  const int n = static_cast<int>(series.times.size());
  if (n < 6) throw ParameterError("fit_decay: need at least 6 points");
  if (series.norms.size() != series.times.size())
    throw ParameterError("fit_decay: times/norms length mismatch");
  const double span = std::log10(series.times.back() / series.times.front());
  if (span < 1.5) throw ParameterError("fit_decay: need >= 1.5 decades of time span");

  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    if (!(series.norms[i] > 0.0))
      throw ParameterError("fit_decay: norms must be positive");
    lx[i] = std::log(series.times[i]);
    ly[i] = std::log(series.norms[i]);
  }
  const LinFit power = linear_fit(lx, ly);

  DecayFit fit;
  fit.exponent = -power.slope;
  fit.amplitude = std::exp(power.intercept);
  fit.log_factor = false;
  double best_ssr = power.ssr;

  if (try_log) {
    // log n = log a - alpha log t + log(1 + log t)
    std::vector<double> ly2(n);
    for (int i = 0; i < n; ++i) ly2[i] = ly[i] - std::log(1.0 + lx[i]);
    const LinFit lg = linear_fit(lx, ly2);
    if (lg.ssr < best_ssr) {
      fit.exponent = -lg.slope;
      fit.amplitude = std::exp(lg.intercept);
      fit.log_factor = true;
      best_ssr = lg.ssr;
    }
  }

  double mean = 0.0;
  for (double v : ly) mean += v;
  mean /= n;
  double sst = 0.0;
  for (double v : ly) sst += (v - mean) * (v - mean);
  fit.r_squared = (sst > 0.0) ? std::max(0.0, 1.0 - best_ssr / sst) : 1.0;
  return fit;
}

}  // namespace stratwave
