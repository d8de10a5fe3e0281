#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>

namespace stratwave::detail {

// Two-term compensated arithmetic ("double-double"), carrying roughly 32
// significant digits. The Whittaker connection formula subtracts terms of
// size e^{+Re z/2} to produce a result of size e^{-Re z/2}; plain doubles
// lose Re z / ln 10 digits there, so the series kernels below run on Dd.

struct Dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr Dd() = default;
  constexpr Dd(double h) : hi(h) {}
  constexpr Dd(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

inline Dd quick_two_sum(double a, double b) {
  // requires |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd operator+(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  Dd t = two_sum(a.lo, b.lo);
  double lo = s.lo + t.hi;
  Dd r = quick_two_sum(s.hi, lo);
  return quick_two_sum(r.hi, r.lo + t.lo);
}

inline Dd operator-(Dd a) { return {-a.hi, -a.lo}; }
inline Dd operator-(Dd a, Dd b) { return a + (-b); }

inline Dd operator*(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd operator/(Dd a, Dd b) {
  double q1 = a.hi / b.hi;
  Dd r = a - b * Dd(q1);
  double q2 = r.hi / b.hi;
  r = r - b * Dd(q2);
  double q3 = r.hi / b.hi;
  Dd q = quick_two_sum(q1, q2);
  return q + Dd(q3);
}

inline Dd& operator+=(Dd& a, Dd b) { a = a + b; return a; }
inline Dd& operator-=(Dd& a, Dd b) { a = a - b; return a; }
inline Dd& operator*=(Dd& a, Dd b) { a = a * b; return a; }
inline Dd& operator/=(Dd& a, Dd b) { a = a / b; return a; }

inline bool operator<(Dd a, Dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(Dd a, Dd b) { return b < a; }

inline Dd fabs(Dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline Dd ldexp(Dd a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

namespace ddc {
inline constexpr Dd pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr Dd pi_2{1.5707963267948966, 6.123233995736766e-17};
inline constexpr Dd two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr Dd ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr Dd euler{0.5772156649015329, -4.942915152430645e-18};
inline constexpr Dd sqrt_pi{1.772453850905516, -7.666586499825799e-17};
inline constexpr Dd inv_sqrt_pi{0.5641895835477563, 7.66772980658294e-18};
inline constexpr Dd sqrt_two_pi{2.5066282746310007, -1.8328579980459167e-16};
// 1/k! for k = 2..31
inline constexpr std::array<Dd, 30> inv_fact{{
    {0.5, 0.0},
    {0.16666666666666666, 9.25185853854297e-18},
    {0.041666666666666664, 2.3129646346357427e-18},
    {0.008333333333333333, 1.1564823173178714e-19},
    {0.001388888888888889, -5.300543954373577e-20},
    {0.0001984126984126984, 1.7209558293420705e-22},
    {2.48015873015873e-05, 2.1511947866775882e-23},
    {2.7557319223985893e-06, -1.858393274046472e-22},
    {2.755731922398589e-07, 2.3767714622250297e-23},
    {2.505210838544172e-08, -1.448814070935912e-24},
    {2.08767569878681e-09, -1.20734505911326e-25},
    {1.6059043836821613e-10, 1.2585294588752098e-26},
    {1.1470745597729725e-11, 2.0655512752830745e-28},
    {7.647163731819816e-13, 7.03872877733453e-30},
    {4.779477332387385e-14, 4.399205485834081e-31},
    {2.8114572543455206e-15, 1.6508842730861433e-31},
    {1.5619206968586225e-16, 1.1910679660273754e-32},
    {8.22063524662433e-18, 2.2141894119604265e-34},
    {4.110317623312165e-19, 1.4412973378659527e-36},
    {1.9572941063391263e-20, -1.3643503830087908e-36},
    {8.896791392450574e-22, -7.911402614872376e-38},
    {3.868170170630684e-23, -8.843177655482344e-40},
    {1.6117375710961184e-24, -3.6846573564509766e-41},
    {6.446950284384474e-26, -1.9330404233703465e-42},
    {2.4795962632247976e-27, -1.2953730964765229e-43},
    {9.183689863795546e-29, 1.4303150396787322e-45},
    {3.279889237069838e-30, 1.5117542744029879e-46},
    {1.1309962886447716e-31, 1.0498015412959506e-47},
    {3.7699876288159054e-33, 2.5870347832750324e-49},
    {1.216125041553518e-34, 5.586290567888806e-51},
}};
}  // namespace ddc

inline Dd sqrt(Dd a) {
  if (a.hi == 0.0) return {0.0, 0.0};
  double s0 = std::sqrt(a.hi);
  Dd s{s0};
  s = (s + a / s) * Dd(0.5);
  s = (s + a / s) * Dd(0.5);
  return s;
}

inline Dd exp(Dd a) {
  if (a.hi > 709.0) return {HUGE_VAL, 0.0};
  if (a.hi < -709.0) return {0.0, 0.0};
  double k = std::round(a.hi / ddc::ln2.hi);
  Dd r = a - ddc::ln2 * Dd(k);
  r = ldexp(r, -9);  // |r| <= ln2/1024
  Dd s = Dd(1.0) + r + r * r * Dd(0.5);
  Dd term = r * r * r;
  for (int i = 3; i <= 10; ++i) {
    s += term * ddc::inv_fact[i - 2];
    term *= r;
  }
  for (int i = 0; i < 9; ++i) s *= s;
  return ldexp(s, static_cast<int>(k));
}

inline Dd log(Dd a) {
  Dd y{std::log(a.hi)};
  for (int i = 0; i < 2; ++i) y += a * exp(-y) - Dd(1.0);
  return y;
}

// sin/cos by reduction to |r| <= pi/4 and Taylor series
inline void sin_cos(Dd a, Dd& s, Dd& c) {
  double k = std::round(a.value() / ddc::pi_2.hi);
  Dd r = a - ddc::pi_2 * Dd(k);
  long q = static_cast<long>(k) & 3;

  Dd r2 = r * r;
  Dd sr = r, term = r;
  for (int i = 1; i <= 14; ++i) {
    term *= r2;
    Dd contrib = term * ddc::inv_fact[2 * i - 1];
    sr += (i & 1) ? -contrib : contrib;
  }
  Dd cr{1.0}, termc{1.0};
  for (int i = 1; i <= 14; ++i) {
    termc *= r2;
    Dd contrib = termc * ddc::inv_fact[2 * i - 2];
    cr += (i & 1) ? -contrib : contrib;
  }
  switch (q) {
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = -sr; break;
    case 2: s = -sr; c = -cr; break;
    default: s = -cr; c = sr; break;
  }
}

inline Dd sin(Dd a) { Dd s, c; sin_cos(a, s, c); return s; }
inline Dd cos(Dd a) { Dd s, c; sin_cos(a, s, c); return c; }

inline void sinh_cosh(Dd a, Dd& sh, Dd& ch) {
  Dd e = exp(a), ei = Dd(1.0) / e;
  sh = ldexp(e - ei, -1);
  ch = ldexp(e + ei, -1);
}

// ---------------------------------------------------------------------------
// complex double-double

struct Cdd {
  Dd re, im;

  constexpr Cdd() = default;
  constexpr Cdd(Dd r) : re(r) {}
  constexpr Cdd(Dd r, Dd i) : re(r), im(i) {}
  Cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline Cdd operator+(Cdd a, Cdd b) { return {a.re + b.re, a.im + b.im}; }
inline Cdd operator-(Cdd a, Cdd b) { return {a.re - b.re, a.im - b.im}; }
inline Cdd operator-(Cdd a) { return {-a.re, -a.im}; }
inline Cdd operator*(Cdd a, Cdd b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cdd operator*(Cdd a, Dd b) { return {a.re * b, a.im * b}; }
inline Cdd operator*(Dd a, Cdd b) { return b * a; }

inline Cdd operator/(Cdd a, Cdd b) {
  // Smith's algorithm on the leading components
  if (std::abs(b.re.hi) >= std::abs(b.im.hi)) {
    Dd t = b.im / b.re;
    Dd d = b.re + b.im * t;
    return {(a.re + a.im * t) / d, (a.im - a.re * t) / d};
  }
  Dd t = b.re / b.im;
  Dd d = b.re * t + b.im;
  return {(a.re * t + a.im) / d, (a.im * t - a.re) / d};
}

inline Cdd& operator+=(Cdd& a, Cdd b) { a = a + b; return a; }
inline Cdd& operator-=(Cdd& a, Cdd b) { a = a - b; return a; }
inline Cdd& operator*=(Cdd& a, Cdd b) { a = a * b; return a; }
inline Cdd& operator/=(Cdd& a, Cdd b) { a = a / b; return a; }

inline Dd abs(Cdd z) { return sqrt(z.re * z.re + z.im * z.im); }

inline double abs_estimate(Cdd z) { return std::hypot(z.re.hi, z.im.hi); }

inline Cdd exp(Cdd z) {
  Dd m = exp(z.re), s, c;
  sin_cos(z.im, s, c);
  return {m * c, m * s};
}

// argument of z to full Dd accuracy: rotate by the double-precision estimate,
// the residual angle is then tiny and atan is linear there
inline Dd arg(Cdd z) {
  double t0 = std::atan2(z.im.hi, z.re.hi);
  Dd s, c;
  sin_cos(Dd(t0), s, c);
  Cdd w = z * Cdd{c, -s};
  Dd d = w.im / w.re;
  return Dd(t0) + d - d * d * d / Dd(3.0);
}

inline Cdd log(Cdd z) { return {log(abs(z)), arg(z)}; }

inline Cdd pow(Cdd z, Cdd w) { return exp(w * log(z)); }

inline Cdd sin(Cdd z) {
  Dd s, c, sh, ch;
  sin_cos(z.re, s, c);
  sinh_cosh(z.im, sh, ch);
  return {s * ch, c * sh};
}

inline Cdd cos(Cdd z) {
  Dd s, c, sh, ch;
  sin_cos(z.re, s, c);
  sinh_cosh(z.im, sh, ch);
  return {c * ch, -(s * sh)};
}

}  // namespace stratwave::detail
