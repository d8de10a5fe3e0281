#include "stratwave/tg_lap.hpp"

#include <algorithm>
#include <cmath>

#include "stratwave/oscquad.hpp"
#include "stratwave/parallel.hpp"
#include "stratwave/specfun.hpp"

namespace stratwave {

namespace {

Complex w_scaled(const FlowParams& p, Complex x) {
  return specfun::whittaker_w(p.gamma, 2.0 * static_cast<double>(p.m) * x);
}

struct DataWindow {
  double lo, hi;
};

DataWindow data_window(const InitialDataProfile& d) {
  const double reach = std::max(d.rho0.is_zero() ? 0.0 : d.rho0.support_radius(),
                                d.omega0.is_zero() ? 0.0 : d.omega0.support_radius());
  const double c = std::max(std::abs(d.rho0.center()), std::abs(d.omega0.center()));
  return {-(reach + c), reach + c};
}

// int_a^b W(pre_sign (y0 - z) + i eps_dir eps) H(z) dz by fixed GL panels;
// the integrand is analytic in z on each side of the kink, so a handful of
// panels suffices
template <typename WFun>
Complex gl_panel_integral(const WFun& wf, const KernelContext& ctx,
                          const SpectralPoint& pt, double a, double b) {
  if (!(b > a)) return Complex(0.0);
  static thread_local std::vector<double> gx, gw;
  if (gx.empty()) quadrule::gauss_legendre(10, gx, gw);
  const double width = std::min(0.5, 0.6 / ctx.params.m);
  const int n_panels = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  const double h = (b - a) / n_panels;
  Complex acc(0.0);
  for (int p = 0; p < n_panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (size_t i = 0; i < gx.size(); ++i) {
      const double z = mid + 0.5 * h * gx[i];
      acc += 0.5 * h * gw[i] * wf(z) * h_source(ctx, z, pt.y0, pt.epsilon, pt.sign);
    }
  }
  return acc;
}

Complex convolution_term(const KernelContext& ctx, const SpectralPoint& pt, double y) {
  const FlowParams& p = ctx.params;
  const DataWindow win = data_window(ctx.data);
  const Complex ie(0.0, pt.sign * pt.epsilon);
  // left part: z <= y, kernel W(y0 - z -+ i eps) W(y - y0 +- i eps)
  const Complex w_right = w_scaled(p, Complex(y - pt.y0) + ie);
  auto wf_left = [&](double z) { return w_scaled(p, Complex(pt.y0 - z) - ie); };
  const Complex left = gl_panel_integral(wf_left, ctx, pt, win.lo, std::min(y, win.hi));
  // right part: z >= y, kernel W(z - y0 +- i eps) W(y0 - y -+ i eps)
  const Complex w_left = w_scaled(p, Complex(pt.y0 - y) - ie);
  auto wf_right = [&](double z) { return w_scaled(p, Complex(z - pt.y0) + ie); };
  const Complex right = gl_panel_integral(wf_right, ctx, pt, std::max(y, win.lo), win.hi);
  return -(w_right * left + w_left * right) / (2.0 * p.m);
}

}  // namespace

Complex greens_function(const FlowParams& params, const SpectralPoint& pt, double y,
                        double z) {
  pt.validate();
  const Complex ie(0.0, pt.sign * pt.epsilon);
  if (y >= z)
    return -w_scaled(params, Complex(pt.y0 - z) - ie) *
           w_scaled(params, Complex(y - pt.y0) + ie) / (2.0 * params.m);
  return -w_scaled(params, Complex(z - pt.y0) + ie) *
         w_scaled(params, Complex(pt.y0 - y) - ie) / (2.0 * params.m);
}

Complex generalized_stream(const KernelContext& ctx, const SpectralPoint& pt, double y,
                           const QuadratureSpec& quad) {
  (void)quad;
  pt.validate();
  if (ctx.data.is_zero()) return Complex(0.0);
  const double b2 = ctx.params.beta * ctx.params.beta;
  const Complex shift(y - pt.y0, pt.sign * pt.epsilon);
  return shift * ctx.data.omega0(y) / b2 - ctx.data.rho0(y) +
         convolution_term(ctx, pt, y);
}

Complex generalized_density(const KernelContext& ctx, const SpectralPoint& pt, double y,
                            const QuadratureSpec& quad) {
  (void)quad;
  pt.validate();
  if (ctx.data.is_zero()) return Complex(0.0);
  const double b2 = ctx.params.beta * ctx.params.beta;
  const Complex shift(y - pt.y0, pt.sign * pt.epsilon);
  return ctx.data.omega0(y) / b2 + convolution_term(ctx, pt, y) / shift;
}

Complex tg_residual(const KernelContext& ctx, const SpectralPoint& pt, double y,
                    const QuadratureSpec& quad, double h) {
  pt.validate();
  if (!(h > 0.0) || h > pt.epsilon / 10.0)
    throw ParameterError("tg_residual: need 0 < h <= eps/10");
  const double m2 = static_cast<double>(ctx.params.m) * ctx.params.m;
  const double b2 = ctx.params.beta * ctx.params.beta;
  const Complex pm = generalized_stream(ctx, pt, y - h, quad);
  const Complex p0 = generalized_stream(ctx, pt, y, quad);
  const Complex pp = generalized_stream(ctx, pt, y + h, quad);
  const Complex lap = (pp - 2.0 * p0 + pm) / (h * h) - m2 * p0;
  const Complex shift(y - pt.y0, pt.sign * pt.epsilon);
  const Complex lhs = lap + b2 * p0 / (shift * shift);
  const Complex rhs = ctx.data.omega0(y) / shift - b2 * ctx.data.rho0(y) / (shift * shift);
  return lhs - rhs;
}

// ---------------------------------------------------------------------------
// t = 0 reconstruction

namespace {

// Piecewise-Chebyshev interpolant of u -> W_{0,gamma}(2m(u + i eps)) on
// [-L, L], panels graded toward the branch point at u ~ 0 where the analytic
// scale collapses to eps. One table serves both resolvent signs through
// W(conj zeta) = conj W(zeta).
class LineTable {
 public:
  LineTable(const FlowParams& p, double eps, double L) : eps_(eps) {
    double hi = L;
    std::vector<std::pair<double, double>> panels;
    while (hi > 0.35 * eps) {
      const double lo = std::max(hi * 0.55, 0.25 * eps);
      panels.push_back({lo, hi});
      hi = lo;
    }
    panels.push_back({0.0, hi});
    // symmetric break list: graded toward 0 from both sides
    std::vector<double> pos;
    for (auto& pr : panels) pos.push_back(pr.second);
    std::sort(pos.begin(), pos.end());
    breaks_.reserve(2 * pos.size() + 1);
    for (auto itr = pos.rbegin(); itr != pos.rend(); ++itr) breaks_.push_back(-*itr);
    breaks_.push_back(0.0);
    for (double v : pos) breaks_.push_back(v);

    const int n = degree_;
    coeffs_.resize(breaks_.size() - 1);
    std::vector<double> cosjk((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) cosjk[j * (n + 1) + k] = std::cos(M_PI * j * k / n);
    parallel_for(static_cast<int>(coeffs_.size()), [&](int pidx) {
      const double a = breaks_[pidx], b = breaks_[pidx + 1];
      std::vector<Complex> v(n + 1);
      for (int j = 0; j <= n; ++j) {
        const double x = std::cos(M_PI * j / n);
        const double u = 0.5 * (a + b) + 0.5 * (b - a) * x;
        v[j] = specfun::whittaker_w(p.gamma, Complex(2.0 * p.m * u, 2.0 * p.m * eps_));
      }
      auto& coef = coeffs_[pidx];
      coef.assign(n + 1, Complex(0.0));
      for (int k = 0; k <= n; ++k) {
        Complex s(0.0);
        for (int j = 0; j <= n; ++j) {
          const double w = (j == 0 || j == n) ? 0.5 : 1.0;
          s += w * v[j] * cosjk[j * (n + 1) + k];
        }
        coef[k] = s * (2.0 / n);
        if (k == 0 || k == n) coef[k] *= 0.5;
      }
    });
  }

  // W(2m(u + i sign eps))
  Complex eval(double u, int sign) const {
    if (sign < 0) return std::conj(eval(u, +1));
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), u);
    int p = static_cast<int>(it - breaks_.begin()) - 1;
    p = std::clamp(p, 0, static_cast<int>(coeffs_.size()) - 1);
    const double a = breaks_[p], b = breaks_[p + 1];
    const double x = std::clamp(2.0 * (u - a) / (b - a) - 1.0, -1.0, 1.0);
    const auto& coef = coeffs_[p];
    Complex b1(0.0), b2(0.0);
    for (int k = static_cast<int>(coef.size()) - 1; k >= 1; --k) {
      const Complex tmp = 2.0 * x * b1 - b2 + coef[k];
      b2 = b1;
      b1 = tmp;
    }
    return x * b1 - b2 + coef[0];
  }

 private:
  double eps_;
  int degree_ = 14;
  std::vector<double> breaks_;
  std::vector<std::vector<Complex>> coeffs_;
};

// reconstruction at one eps: R_eps(y_j) = int (psi^- - psi^+)/(2 pi i) dy0
// with the z-integrals shared across the y-grid through prefix sums on
// grid-aligned panels
ComplexField reconstruct_at_eps(const KernelContext& ctx, const GridSpec& grid,
                                double eps, const QuadratureSpec& quad) {
  (void)quad;
  const FlowParams& p = ctx.params;
  const int n = grid.n_points;
  const double L = std::max(std::abs(grid.y_min), std::abs(grid.y_max)) * 2.0 +
                   data_window(ctx.data).hi + 5.0;
  LineTable table(p, eps, L);

  static thread_local std::vector<double> gx, gw;
  if (gx.empty()) quadrule::gauss_legendre(6, gx, gw);

  // y0 sweep over the same lattice as the grid
  ComplexField out(grid, 0.0);
  const double h = grid.spacing();
  const Complex two_pi_i(0.0, 2.0 * M_PI);

  // iterate panels of y0 between consecutive grid nodes
  std::vector<Complex> accum(n, Complex(0.0));
  std::vector<Complex> la(n + 1), lb(n + 1);

  const DataWindow win = data_window(ctx.data);
  const double b2 = p.beta * p.beta;

  for (int panel = 0; panel < n - 1; ++panel) {
    for (size_t q = 0; q < gx.size(); ++q) {
      const double y0 = grid.node(panel) + 0.5 * h * (1.0 + gx[q]);
      const double wq = 0.5 * h * gw[q];
      for (int sign : {+1, -1}) {
        const SpectralPoint pt{y0, eps, sign};
        // prefix integrals of W((y0 - z) + i...) H and W((z - y0) + ...) H
        // on grid-aligned z-panels
        la[0] = Complex(0.0);
        for (int j = 0; j < n - 1; ++j) {
          Complex seg(0.0);
          const double za = grid.node(j), zb = grid.node(j + 1);
          if (zb > win.lo && za < win.hi) {
            for (size_t i = 0; i < gx.size(); ++i) {
              const double z = 0.5 * (za + zb) + 0.5 * h * gx[i];
              seg += 0.5 * h * gw[i] * table.eval(y0 - z, -sign) *
                     h_source(ctx, z, y0, eps, sign);
            }
          }
          la[j + 1] = la[j] + seg;
        }
        lb[n - 1] = Complex(0.0);
        for (int j = n - 2; j >= 0; --j) {
          Complex seg(0.0);
          const double za = grid.node(j), zb = grid.node(j + 1);
          if (zb > win.lo && za < win.hi) {
            for (size_t i = 0; i < gx.size(); ++i) {
              const double z = 0.5 * (za + zb) + 0.5 * h * gx[i];
              seg += 0.5 * h * gw[i] * table.eval(z - y0, sign) *
                     h_source(ctx, z, y0, eps, sign);
            }
          }
          lb[j] = lb[j + 1] + seg;
        }
        const double sgn = static_cast<double>(sign);
        for (int j = 0; j < n; ++j) {
          const double y = grid.node(j);
          const Complex conv = -(table.eval(y - y0, sign) * la[j] +
                                 table.eval(y0 - y, -sign) * lb[j]) /
                               (2.0 * p.m);
          const Complex shift(y - y0, sgn * eps);
          const Complex psi = shift * ctx.data.omega0(y) / b2 - ctx.data.rho0(y) + conv;
          // psi^- enters with +, psi^+ with -
          accum[j] += wq * (sign < 0 ? psi : -psi);
        }
      }
    }
  }
  for (int j = 0; j < n; ++j) out.values[j] = accum[j] / two_pi_i;
  return out;
}

}  // namespace

ComplexField lap_reconstruct_t0(const KernelContext& ctx, const GridSpec& grid,
                                const std::vector<double>& eps_sequence,
                                const QuadratureSpec& quad) {
  grid.validate();
  if (eps_sequence.size() < 2)
    throw ParameterError("lap_reconstruct_t0: need at least two eps values");
  for (size_t i = 1; i < eps_sequence.size(); ++i)
    if (!(eps_sequence[i] < eps_sequence[i - 1]) || !(eps_sequence[i] > 0.0))
      throw ParameterError("lap_reconstruct_t0: eps sequence must be positive descending");

  std::vector<ComplexField> rec;
  rec.reserve(eps_sequence.size());
  for (double eps : eps_sequence) rec.push_back(reconstruct_at_eps(ctx, grid, eps, quad));

  // linear eps -> 0 extrapolation on consecutive pairs
  const int n = grid.n_points;
  std::vector<ComplexField> extr;
  for (size_t k = 0; k + 1 < rec.size(); ++k) {
    const double e0 = eps_sequence[k], e1 = eps_sequence[k + 1];
    ComplexField x(grid, 0.0);
    for (int j = 0; j < n; ++j)
      x.values[j] = (e0 * rec[k + 1].values[j] - e1 * rec[k].values[j]) / (e0 - e1);
    extr.push_back(std::move(x));
  }
  if (extr.size() >= 2) {
    auto l2diff = [&](const ComplexField& a, const ComplexField& b) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += std::norm(a.values[j] - b.values[j]);
      return std::sqrt(acc);
    };
    const double d_last = l2diff(extr[extr.size() - 1], extr[extr.size() - 2]);
    double d_first = d_last;
    if (extr.size() >= 3) d_first = l2diff(extr[1], extr[0]);
    if (d_last > 1.25 * d_first + 1e-14)
      throw ConvergenceError("lap_reconstruct_t0: eps extrapolation not converging");
  }
  return extr.back();
}

}  // namespace stratwave
