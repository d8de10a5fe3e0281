#include "stratwave/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace stratwave::specfun {

using detail::Cdd;
using detail::Dd;
namespace ddc = detail::ddc;

namespace {

constexpr double kKummerRadius = 60.0;
constexpr int kKummerMaxTerms = 500;

bool is_nonpositive_integer(Complex w, double tol = 1e-12) {
  if (std::abs(w.imag()) > tol) return false;
  if (w.real() > 0.5) return false;
  return std::abs(w.real() - std::round(w.real())) <= tol;
}

void check_off_cut(Complex zeta, const char* who) {
  if (zeta.imag() == 0.0 && zeta.real() <= 0.0)
    throw BranchCutError(std::string(who) + ": argument on the branch cut (-inf, 0]");
}

// ---------------------------------------------------------------------------
// Gamma (Lanczos g = 607/128, 15 terms, evaluated in compensated arithmetic)

constexpr double kLanczosG = 4.7421875;  // 607/128
constexpr std::array<double, 15> kLanczos{
    0.99999999999999709182,    57.156235665862923517,   -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978, 0.33994649984811888699e-4,
    0.46523628927048575665e-4, -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4, -0.26190838401581408670e-4, 0.36899182659531622704e-5};

Cdd gamma_dd(Cdd z) {
  if (is_nonpositive_integer(z.value()))
    throw ParameterError("complex_gamma: pole at nonpositive integer");
  if (z.re.hi < 0.5) {
    // reflection through sin(pi z)
    Cdd s = sin(ddc::pi * z);
    return Cdd{ddc::pi} / (s * gamma_dd(Cdd{Dd(1.0)} - z));
  }
  Cdd zm = z - Cdd{Dd(1.0)};
  Cdd acc{Dd(kLanczos[0])};
  for (int k = 1; k < 15; ++k)
    acc += Cdd{Dd(kLanczos[k])} / (zm + Cdd{Dd(static_cast<double>(k))});
  Cdd t = zm + Cdd{Dd(kLanczosG + 0.5)};
  Cdd power = pow(t, zm + Cdd{Dd(0.5)});
  return Cdd{ddc::sqrt_two_pi} * power * exp(-t) * acc;
}

// ---------------------------------------------------------------------------
// Kummer series

Cdd kummer_dd(Cdd a, Cdd b, Cdd z, int max_terms = kKummerMaxTerms,
              double rel_tol = 1e-33) {
  Cdd sum{Dd(1.0)};
  Cdd term{Dd(1.0)};
  int small_run = 0;
  for (int s = 0; s < max_terms; ++s) {
    Dd sd(static_cast<double>(s));
    term = term * ((a + Cdd{sd}) / ((b + Cdd{sd}) * Cdd{Dd(s + 1.0)})) * z;
    sum += term;
    const double tm = detail::abs_estimate(term);
    const double sm = std::max(detail::abs_estimate(sum), 1e-290);
    if (tm < rel_tol * sm) {
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("kummer_m: series did not converge within term budget");
}

// h_{+-}(z) = e^{-z/2} M(1/2 +- g, 1 +- 2g, z), an entire function, together
// with its first `orders` derivatives from the term-differentiated series.
struct HSeries {
  Cdd h, h1, h2;
};

HSeries whittaker_h_dd(Cdd g, int sign, Cdd z, int orders) {
  Cdd a = Cdd{Dd(0.5)} + (sign > 0 ? g : -g);
  Cdd b = Cdd{Dd(1.0)} + (sign > 0 ? g + g : -(g + g));
  if (is_nonpositive_integer(b.value()))
    throw ParameterError("whittaker: degenerate index, 1 +- 2 gamma is a nonpositive integer");
  Cdd e = exp(-z * Cdd{Dd(0.5)});
  HSeries out;
  Cdd m0 = kummer_dd(a, b, z);
  out.h = e * m0;
  if (orders >= 1) {
    Cdd m1 = kummer_dd(a + Cdd{Dd(1.0)}, b + Cdd{Dd(1.0)}, z);
    Cdd ab = a / b;
    out.h1 = e * (ab * m1 - m0 * Cdd{Dd(0.5)});
    if (orders >= 2) {
      Cdd m2 = kummer_dd(a + Cdd{Dd(2.0)}, b + Cdd{Dd(2.0)}, z);
      Cdd ab2 = ab * ((a + Cdd{Dd(1.0)}) / (b + Cdd{Dd(1.0)}));
      out.h2 = e * (m0 * Cdd{Dd(0.25)} - ab * m1 + ab2 * m2);
    }
  }
  return out;
}

struct ConnectionCoeffs {
  Cdd A, B;  // Gamma(-2g)/Gamma(1/2-g), Gamma(2g)/Gamma(1/2+g)
};

ConnectionCoeffs connection_coeffs(Cdd g) {
  // one gamma dominates any given run; a last-value cache saves the four
  // Gamma evaluations per W call
  thread_local Complex cached_g{std::nan(""), 0.0};
  thread_local ConnectionCoeffs cached{};
  const Complex gv = g.value();
  if (gv == cached_g) return cached;
  Cdd two_g = g + g;
  if (is_nonpositive_integer(two_g.value()) || is_nonpositive_integer((-two_g).value()))
    throw ParameterError("whittaker_w: connection formula invalid, 2 gamma integral");
  cached = {gamma_dd(-two_g) / gamma_dd(Cdd{Dd(0.5)} - g),
            gamma_dd(two_g) / gamma_dd(Cdd{Dd(0.5)} + g)};
  cached_g = gv;
  return cached;
}

// ---------------------------------------------------------------------------
// I0 / K0 ascending series with termwise derivatives (compensated).
// series_i: I0(x) = sum_k (x^2/4)^k / (k!)^2
// series_s: S(x)  = sum_k H_k (x^2/4)^k / (k!)^2
struct BesselSeries {
  Cdd i0, i1, i2;  // I0 and d/dx, d2/dx2
  Cdd s0, s1, s2;  // S and derivatives
};

BesselSeries bessel_series_dd(Cdd x) {
  BesselSeries r;
  Cdd x2 = x * x;
  Cdd coeff{Dd(1.0)};      // (1/4)^k / (k!)^2
  Cdd xpow{Dd(1.0)};       // x^{2k}
  Cdd xpow_m1{};           // x^{2k-1}
  Cdd xpow_m2{};           // x^{2k-2}
  Dd harmonic{0.0};
  r.i0 = Cdd{Dd(1.0)};
  const double xmag = detail::abs_estimate(x);
  const int kmax = 40 + static_cast<int>(2.2 * xmag);
  for (int k = 1; k <= kmax; ++k) {
    coeff = coeff / Cdd{Dd(4.0 * k * k)};
    xpow_m2 = xpow;               // x^{2k-2}
    xpow_m1 = xpow * x;           // x^{2k-1}
    xpow = xpow * x2;             // x^{2k}
    harmonic += Dd(1.0) / Dd(static_cast<double>(k));
    Cdd base = coeff * xpow;
    Cdd d1 = coeff * Cdd{Dd(2.0 * k)} * xpow_m1;
    Cdd d2 = coeff * Cdd{Dd(2.0 * k * (2.0 * k - 1.0))} * xpow_m2;
    r.i0 += base;
    r.i1 += d1;
    r.i2 += d2;
    r.s0 += base * Cdd{harmonic};
    r.s1 += d1 * Cdd{harmonic};
    r.s2 += d2 * Cdd{harmonic};
    if (detail::abs_estimate(base) <
        1e-34 * std::max(detail::abs_estimate(r.i0), 1e-290))
      break;
  }
  return r;
}

// asymptotic sums for I/K, double precision, |z| > kBesselSeriesMax
Complex bessel_asym_sum(Complex z, double nu, int sign_alternate) {
  // sum_s a_s(nu) (sign z)^{-s}, a_s = a_{s-1} (4 nu^2 - (2s-1)^2) / (8 s)
  Complex sum = 1.0, term = 1.0;
  double prev = 1e300;
  for (int s = 1; s <= 30; ++s) {
    const double num = 4.0 * nu * nu - (2.0 * s - 1.0) * (2.0 * s - 1.0);
    term *= num / (8.0 * s) / z;
    if (sign_alternate) term *= -1.0;
    const double mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    prev = mag;
    if (mag < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

Complex k_asym(Complex z, double nu) {
  return std::sqrt(Complex(M_PI) / (2.0 * z)) * std::exp(-z) *
         bessel_asym_sum(z, nu, /*alternate=*/0);
}

Complex i_asym(Complex z, double nu) {
  // dominant branch only; the recessive e^{-z} part is below e^{-2|z|}
  return std::exp(z) / std::sqrt(2.0 * M_PI * z) * bessel_asym_sum(z, nu, 1);
}

// K0 of x (principal branch, series zone): -(log(x/2)+euler) I0 + S
Cdd k0_series_dd(Cdd x) {
  BesselSeries s = bessel_series_dd(x);
  Cdd lg = log(x) - Cdd{ddc::ln2} + Cdd{ddc::euler};
  return s.s0 - lg * s.i0;
}

// ---------------------------------------------------------------------------
// gamma = 0: W and derivatives from the K0 ascending series, termwise in zeta.
// W(z) = pi^{-1/2} z^{1/2} K(z),  K(z) := K0(z/2) = -(log(z/4)+euler) I(z) + S(z)
// with I(z) = I0(z/2), S(z) = S(z/2); derivatives in z chain through the 1/2.

Complex w_k0form_impl(Complex zeta, int order) {
  Cdd z{zeta};
  BesselSeries bs = bessel_series_dd(z * Cdd{Dd(0.5)});
  Cdd I = bs.i0, I1 = bs.i1 * Cdd{Dd(0.5)}, I2 = bs.i2 * Cdd{Dd(0.25)};
  Cdd S = bs.s0, S1 = bs.s1 * Cdd{Dd(0.5)}, S2 = bs.s2 * Cdd{Dd(0.25)};
  Cdd lg = log(z) - Cdd{Dd(2.0)} * Cdd{ddc::ln2} + Cdd{ddc::euler};  // log(z/4)+euler
  Cdd K = S - lg * I;
  Cdd inv_z = Cdd{Dd(1.0)} / z;
  Cdd K1 = S1 - inv_z * I - lg * I1;
  Cdd sq = pow(z, Cdd{Dd(0.5)});
  Cdd isp{ddc::inv_sqrt_pi};
  if (order == 0) return (isp * sq * K).value();
  Cdd half_over = inv_z * Cdd{Dd(0.5)};
  if (order == 1) return (isp * sq * (half_over * K + K1)).value();
  Cdd K2 = S2 + inv_z * inv_z * I - Cdd{Dd(2.0)} * inv_z * I1 - lg * I2;
  Cdd r = isp * sq * (K2 + inv_z * K1 - inv_z * inv_z * Cdd{Dd(0.25)} * K);
  return r.value();
}

// ---------------------------------------------------------------------------
// Laplace-transform representation, Re zeta > 0:
// W_{0,g}(z) = e^{-z/2} z^{g+1/2} / Gamma(g+1/2) * L0,
// L_w = int_0^inf e^{-z t} t^{g-1/2+w} (1+t)^{g-1/2} dt,
// via the exp-sinh substitution t = exp((pi/2) sinh u).

struct LaplaceMoments {
  Complex l0, l1, l2;
};

LaplaceMoments laplace_moments(Complex gamma, Complex zeta, int orders, double h) {
  const Complex q = gamma - 0.5;
  auto node = [&](double u, LaplaceMoments& acc) {
    const double sh = std::sinh(u), ch = std::cosh(u);
    const double lt = M_PI_2 * sh;  // log t
    if (lt > 300.0 || lt < -700.0) return 0.0;
    const double t = std::exp(lt);
    const Complex f =
        std::exp(-zeta * t + q * (lt + std::log1p(t))) * (M_PI_2 * ch * t);
    acc.l0 += f;
    if (orders >= 1) acc.l1 += f * t;
    if (orders >= 2) acc.l2 += f * (t * t);
    return std::abs(f);
  };
  LaplaceMoments acc;
  double scale = node(0.0, acc);
  scale = std::max(scale, 1e-300);
  for (int dir : {+1, -1}) {
    int quiet = 0;
    for (int k = 1; k <= 4000; ++k) {
      const double m = node(dir * k * h, acc);
      scale = std::max(scale, m);
      if (m < 1e-19 * scale) {
        if (++quiet >= 6) break;
      } else {
        quiet = 0;
      }
    }
  }
  acc.l0 *= h;
  acc.l1 *= h;
  acc.l2 *= h;
  return acc;
}

Complex w_laplace_impl(Complex gamma, Complex zeta, int order) {
  if (!(zeta.real() > 0.0))
    throw ParameterError("whittaker_w (laplace regime): requires Re zeta > 0");
  const Complex p = gamma + 0.5;
  LaplaceMoments prev = laplace_moments(gamma, zeta, order, 1.0 / 8.0);
  LaplaceMoments cur;
  double err = 1.0;
  for (int lev = 1; lev <= 4; ++lev) {
    const double h = 1.0 / (8 << lev);
    cur = laplace_moments(gamma, zeta, order, h);
    err = std::abs(cur.l0 - prev.l0) / std::max(std::abs(cur.l0), 1e-300);
    if (err < 1e-13) break;
    prev = cur;
  }
  if (err > 1e-10)
    throw ToleranceError("whittaker_w (laplace regime): quadrature stalled", 1e-10, err);
  const Complex pref = std::exp(-0.5 * zeta) * std::pow(zeta, p) / complex_gamma(p);
  if (order == 0) return pref * cur.l0;
  const Complex d = -0.5 + p / zeta;
  if (order == 1) return pref * (d * cur.l0 - cur.l1);
  return pref * ((d * d - p / (zeta * zeta)) * cur.l0 - 2.0 * d * cur.l1 + cur.l2);
}

// ---------------------------------------------------------------------------
// Large-|zeta| asymptotic branch, valid off the cut:
// W = e^{-z/2} F(z), F = sum_s c_s, c_s = c_{s-1} * -((s-1/2)^2-g^2)/(s z).

Complex w_asymptotic_impl(Complex gamma, Complex zeta, int order) {
  const Complex g2 = gamma * gamma;
  Complex f0 = 1.0, f1 = 0.0, f2 = 0.0;
  Complex term = 1.0;
  double prev = 1e300;
  for (int s = 1; s <= 40; ++s) {
    const double sh = s - 0.5;
    term *= -(Complex(sh * sh) - g2) / (static_cast<double>(s) * zeta);
    const double mag = std::abs(term);
    if (mag > prev) break;
    f0 += term;
    f1 += term * (-static_cast<double>(s)) / zeta;
    f2 += term * (static_cast<double>(s) * (s + 1.0)) / (zeta * zeta);
    prev = mag;
    if (mag < 1e-18) break;
  }
  const Complex e = std::exp(-0.5 * zeta);
  if (order == 0) return e * f0;
  if (order == 1) return e * (f1 - 0.5 * f0);
  return e * (0.25 * f0 - f1 + f2);
}

// ---------------------------------------------------------------------------
// Connection-formula branch (compensated): W = A M_{0,g} + B M_{0,-g}.

Complex w_connection_impl(Complex gamma, Complex zeta, int order) {
  Cdd g{gamma};
  Cdd z{zeta};
  ConnectionCoeffs cc = connection_coeffs(g);
  Cdd total{};
  for (int sgn : {+1, -1}) {
    Cdd coeff = (sgn > 0) ? cc.A : cc.B;
    Cdd p = Cdd{Dd(0.5)} + (sgn > 0 ? g : -g);
    HSeries hs = whittaker_h_dd(g, sgn, z, order);
    Cdd contrib;
    if (order == 0) {
      contrib = pow(z, p) * hs.h;
    } else if (order == 1) {
      contrib = pow(z, p - Cdd{Dd(1.0)}) * (p * hs.h + z * hs.h1);
    } else {
      contrib = pow(z, p - Cdd{Dd(2.0)}) *
                (p * (p - Cdd{Dd(1.0)}) * hs.h + Cdd{Dd(2.0)} * p * z * hs.h1 +
                 z * z * hs.h2);
    }
    total += coeff * contrib;
  }
  return total.value();
}

Complex w_dispatch(Complex gamma, Complex zeta, int order) {
  check_off_cut(zeta, "whittaker_w");
  const double gm = std::abs(gamma);
  const bool degenerate = (gm == 0.0);
  if (!degenerate && gm < internal::kDegeneracyThreshold)
    throw ParameterError(
        "whittaker_w: 0 < |gamma| < 1e-8 loses all digits to cancellation in the "
        "connection formula; treat as gamma = 0 or move away from degeneracy");
  const double zm = std::abs(zeta);
  if (zm > internal::kAsymptoticMin) return w_asymptotic_impl(gamma, zeta, order);
  if (degenerate) return w_k0form_impl(zeta, order);
  if (zeta.real() > internal::kConnectionReMax)
    return w_laplace_impl(gamma, zeta, order);
  return w_connection_impl(gamma, zeta, order);
}

}  // namespace

// ---------------------------------------------------------------------------
// public interface

Complex complex_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw ParameterError("complex_gamma: pole at nonpositive integer");
  return gamma_dd(Cdd{z}).value();
}

Complex kummer_m(Complex a, Complex b, Complex zeta) {
  if (is_nonpositive_integer(b))
    throw ParameterError("kummer_m: b is a nonpositive integer");
  if (std::abs(zeta) > kKummerRadius)
    throw ParameterError("kummer_m: |zeta| beyond series radius 60");
  return kummer_dd(Cdd{a}, Cdd{b}, Cdd{zeta}).value();
}

Complex whittaker_m(Complex gamma, int sign, Complex zeta) {
  if (sign != 1 && sign != -1) throw ParameterError("whittaker_m: sign must be +-1");
  if (zeta == Complex(0.0)) return 0.0;
  check_off_cut(zeta, "whittaker_m");
  if (std::abs(zeta) > kKummerRadius)
    throw ParameterError("whittaker_m: |zeta| beyond series radius 60");
  Cdd g{gamma};
  Cdd z{zeta};
  Cdd p = Cdd{Dd(0.5)} + (sign > 0 ? g : -g);
  HSeries hs = whittaker_h_dd(g, sign, z, 0);
  return (pow(z, p) * hs.h).value();
}

Complex whittaker_w(Complex gamma, Complex zeta) { return w_dispatch(gamma, zeta, 0); }
Complex whittaker_w_prime(Complex gamma, Complex zeta) { return w_dispatch(gamma, zeta, 1); }
Complex whittaker_w_second(Complex gamma, Complex zeta) { return w_dispatch(gamma, zeta, 2); }

Complex bessel_k0(Complex zeta) {
  if (!(zeta.real() > 0.0)) throw ParameterError("bessel_k0: requires Re zeta > 0");
  if (std::abs(zeta) <= internal::kBesselSeriesMax) return k0_series_dd(Cdd{zeta}).value();
  return k_asym(zeta, 0.0);
}

Complex bessel_k1(Complex zeta) {
  if (!(zeta.real() > 0.0)) throw ParameterError("bessel_k1: requires Re zeta > 0");
  if (std::abs(zeta) <= internal::kBesselSeriesMax) {
    // K1 = 1/z + log(z/2) I1 - (1/2) sum_k (H_k + H_{k+1}) (z/2)^{2k+1} / (k!(k+1)!)
    Cdd z{zeta};
    Cdd half_z = z * Cdd{Dd(0.5)};
    Cdd q = half_z * half_z;
    Cdd i1{}, srm{};
    Cdd coeff{Dd(1.0)};  // 1/(k!(k+1)!) * (z/2)^{2k}, progressively
    Cdd zpow = half_z;
    Dd hk{0.0}, hk1{1.0};
    for (int k = 0; k <= 60; ++k) {
      if (k > 0) {
        coeff = coeff / Cdd{Dd(static_cast<double>(k) * (k + 1.0))};
        zpow = zpow * q;
        hk += Dd(1.0) / Dd(static_cast<double>(k));
        hk1 += Dd(1.0) / Dd(k + 1.0);
      }
      Cdd base = coeff * zpow;
      i1 += base;
      srm += base * Cdd{(hk + hk1)};
      if (detail::abs_estimate(base) < 1e-34) break;
    }
    // K1(z) = 1/z + (log(z/2)+euler) I1(z) - (1/2) sum_k (H_k+H_{k+1}) (z/2)^{2k+1}/(k!(k+1)!)
    Cdd lg = log(z) - Cdd{ddc::ln2};
    Cdd r = Cdd{Dd(1.0)} / z + (lg + Cdd{ddc::euler}) * i1 - srm * Cdd{Dd(0.5)};
    return r.value();
  }
  return k_asym(zeta, 1.0);
}

Complex bessel_i0(Complex zeta) {
  Complex z = zeta;
  if (z.real() < 0.0) z = -z;  // I0 is even
  if (std::abs(z) <= 2.0 * internal::kBesselSeriesMax)
    return bessel_series_dd(Cdd{z}).i0.value();
  return i_asym(z, 0.0);
}

Complex continuation_jump(Complex gamma, double eta, double epsilon, int m) {
  if (!(eta > 0.0)) throw ParameterError("continuation_jump: eta must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ParameterError("continuation_jump: epsilon must lie in (0,1)");
  if (m < 1) throw ParameterError("continuation_jump: m must be >= 1");
  if (std::abs(gamma) < internal::kDegeneracyThreshold)
    throw ParameterError("continuation_jump: degenerate index gamma ~ 0");

  Cdd g{gamma};
  ConnectionCoeffs cc = connection_coeffs(g);
  const Cdd i_unit{Dd(0.0), Dd(1.0)};
  Cdd eip = exp(i_unit * (ddc::pi * g));    // e^{+i gamma pi}
  Cdd eim = exp(-(i_unit * (ddc::pi * g)));  // e^{-i gamma pi}

  const double tm = 2.0 * m;
  Cdd zm{Complex(tm * eta, -tm * epsilon)};  // 2m(eta - i eps)
  Cdd zp{Complex(tm * eta, tm * epsilon)};   // 2m(eta + i eps)

  auto m_branch = [&](int sgn, Cdd z) {
    Cdd p = Cdd{Dd(0.5)} + (sgn > 0 ? g : -g);
    HSeries hs = whittaker_h_dd(g, sgn, z, 0);
    return pow(z, p) * hs.h;
  };

  // W(-eta + i eps) = i e^{+i g pi} A M_+(zm) + i e^{-i g pi} B M_-(zm)
  // W(-eta - i eps) = -i e^{-i g pi} A M_+(zp) - i e^{+i g pi} B M_-(zp)
  Cdd jump = i_unit * (eip * cc.A * m_branch(+1, zm) + eim * cc.B * m_branch(-1, zm) +
                       eim * cc.A * m_branch(+1, zp) + eip * cc.B * m_branch(-1, zp));
  return jump.value();
}

WhittakerIndex make_whittaker_index(Complex gamma) {
  return {gamma, std::abs(gamma) < internal::kDegeneracyThreshold};
}

SmallArgExpansion small_arg_expansion(Complex gamma) {
  SmallArgExpansion e;
  e.has_log = std::abs(gamma) < internal::kDegeneracyThreshold;
  e.exponent = e.has_log ? Complex(0.5) : Complex(0.5) - gamma;
  double bound = 0.0;
  for (int k = 0; k < 48; ++k) {
    const double zeta = std::pow(10.0, -4.0 + 4.0 * (k + 1) / 48.0);  // (1e-4, 1]
    const Complex w = whittaker_w(gamma, zeta);
    double env;
    if (e.has_log) {
      env = std::abs(w) / (std::sqrt(zeta) * (1.0 + std::abs(std::log(zeta))));
    } else {
      env = std::abs(w / std::pow(Complex(zeta), e.exponent));
    }
    bound = std::max(bound, env);
  }
  e.envelope_bound = bound;
  return e;
}

// ---------------------------------------------------------------------------
// SmallEtaDecomposition

SmallEtaDecomposition::SmallEtaDecomposition(Complex gamma, int m, WhittakerForm form)
    : gamma_(gamma), two_m_(2.0 * m), form_(form),
      degenerate_(std::abs(gamma) < internal::kDegeneracyThreshold) {
  if (m < 1) throw ParameterError("SmallEtaDecomposition: m must be >= 1");
  const Complex shift = (form == WhittakerForm::value) ? Complex(0.0) : Complex(-1.0);
  if (!degenerate_) {
    Cdd g{gamma};
    ConnectionCoeffs cc = connection_coeffs(g);
    Cdd tm{Dd(two_m_)};
    coeff_plus_ = cc.A * pow(Cdd{tm}, Cdd{Dd(0.5)} + g);
    coeff_minus_ = cc.B * pow(Cdd{tm}, Cdd{Dd(0.5)} - g);
    terms_.push_back({Complex(0.5) + gamma + shift, 0});
    terms_.push_back({Complex(0.5) - gamma + shift, 0});
  } else {
    terms_.push_back({Complex(0.5) + shift, 0});
    terms_.push_back({Complex(0.5) + shift, 1});
  }
}

Complex SmallEtaDecomposition::analytic_factor(int i, double eta) const {
  const Cdd z{Complex(two_m_ * eta, 0.0)};
  const bool deriv = (form_ == WhittakerForm::derivative);
  if (!degenerate_) {
    const int sgn = (i == 0) ? +1 : -1;
    const Cdd coeff = (i == 0) ? coeff_plus_ : coeff_minus_;
    Cdd g{gamma_};
    HSeries hs = whittaker_h_dd(g, sgn, z, deriv ? 1 : 0);
    if (!deriv) return (coeff * hs.h).value();
    Cdd p = Cdd{Dd(0.5)} + (sgn > 0 ? g : -g);
    return (coeff * (p * hs.h + z * hs.h1)).value();
  }
  // gamma = 0: from K0 series,
  //   W_m(eta) = eta^{1/2} (Phi1(eta) + log(eta) Phi2(eta))
  //   Phi1 = sqrt(2m) (E1(z) - log(2m) E2(z)), Phi2 = -sqrt(2m) E2(z)
  //   E1 = (S(z/2) + (2 log 2 - euler) I0(z/2)) / sqrt(pi), E2 = I0(z/2)/sqrt(pi)
  BesselSeries bs = bessel_series_dd(z * Cdd{Dd(0.5)});
  const Cdd isp{ddc::inv_sqrt_pi};
  const Cdd c2log2_me = Cdd{ddc::ln2} + Cdd{ddc::ln2} - Cdd{ddc::euler};
  const Dd sq2m = detail::sqrt(Dd(two_m_));
  const Dd log2m = detail::log(Dd(two_m_));
  Cdd e1 = (bs.s0 + c2log2_me * bs.i0) * isp;
  Cdd e2 = bs.i0 * isp;
  if (!deriv) {
    if (i == 0) return (Cdd{sq2m} * (e1 - Cdd{log2m} * e2)).value();
    return (-(Cdd{sq2m} * e2)).value();
  }
  // derivative form: W_m'(eta) = eta^{-1/2}(Psi1 + log(eta) Psi2)
  //   Psi1 = Phi1/2 + eta Phi1' + Phi2,  Psi2 = Phi2/2 + eta Phi2'
  // with d/deta = 2m d/dzeta and E' chained through I', S' at z/2.
  Cdd e1p = (bs.s1 * Cdd{Dd(0.5)} + c2log2_me * bs.i1 * Cdd{Dd(0.5)}) * isp;
  Cdd e2p = bs.i1 * Cdd{Dd(0.5)} * isp;
  Cdd phi1 = Cdd{sq2m} * (e1 - Cdd{log2m} * e2);
  Cdd phi2 = -(Cdd{sq2m} * e2);
  Cdd phi1p = Cdd{sq2m} * (e1p - Cdd{log2m} * e2p) * Cdd{Dd(two_m_)};
  Cdd phi2p = -(Cdd{sq2m} * e2p * Cdd{Dd(two_m_)});
  const Cdd eta_dd{Dd(eta)};
  if (i == 0) return (phi1 * Cdd{Dd(0.5)} + eta_dd * phi1p + phi2).value();
  return (phi2 * Cdd{Dd(0.5)} + eta_dd * phi2p).value();
}

namespace internal {
Complex whittaker_w_connection(Complex gamma, Complex zeta, int order) {
  check_off_cut(zeta, "whittaker_w_connection");
  return w_connection_impl(gamma, zeta, order);
}
Complex whittaker_w_laplace(Complex gamma, Complex zeta, int order) {
  return w_laplace_impl(gamma, zeta, order);
}
Complex whittaker_w_asymptotic(Complex gamma, Complex zeta, int order) {
  check_off_cut(zeta, "whittaker_w_asymptotic");
  return w_asymptotic_impl(gamma, zeta, order);
}
Complex whittaker_w_k0form(Complex zeta, int order) {
  check_off_cut(zeta, "whittaker_w_k0form");
  return w_k0form_impl(zeta, order);
}
Complex whittaker_w_any(Complex gamma, Complex zeta, int order) {
  return w_dispatch(gamma, zeta, order);
}
}  // namespace internal

}  // namespace stratwave::specfun
