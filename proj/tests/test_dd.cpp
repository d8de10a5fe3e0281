#include "doctest.h"

#include <cmath>
#include <complex>

#include "stratwave/dd.hpp"

using namespace stratwave::detail;

namespace {
double ulp_err(Dd a, long double ref) {
  const long double got = static_cast<long double>(a.hi) + static_cast<long double>(a.lo);
  return static_cast<double>(std::abs(got - ref) / std::abs(ref));
}
}  // namespace

TEST_CASE("dd add/mul/div keep ~30 digits") {
  Dd a = Dd(1.0) / Dd(3.0);
  long double third = 1.0L / 3.0L;
  // long double has ~19 digits, enough to see dd beating plain double
  CHECK(ulp_err(a, third) < 1e-18);

  Dd b = a * Dd(3.0) - Dd(1.0);
  CHECK(std::abs(b.hi) < 1e-31);

  Dd c = (Dd(2.0) / Dd(7.0)) * Dd(7.0) - Dd(2.0);
  CHECK(std::abs(c.hi) < 1e-30);
}

TEST_CASE("dd exp and log invert each other") {
  for (double x : {-5.0, -0.7, 0.0, 0.3, 1.0, 12.5, 40.0}) {
    Dd e = exp(Dd(x));
    CHECK(std::abs(e.value() - std::exp(x)) / std::exp(x) < 1e-15);
    Dd l = log(e);
    CHECK(std::abs((l - Dd(x)).value()) < 1e-28 * std::max(1.0, std::abs(x)));
  }
  // exp(1) against known digits
  Dd e1 = exp(Dd(1.0));
  CHECK(std::abs(e1.hi - 2.718281828459045) < 1e-15);
  CHECK(std::abs(e1.lo - 1.4456468917292502e-16) < 1e-26);
}

TEST_CASE("dd sin/cos at reference points") {
  Dd s, c;
  sin_cos(ddc::pi_2, s, c);
  CHECK(std::abs(s.value() - 1.0) < 1e-30);
  CHECK(std::abs(c.value()) < 1e-30);
  sin_cos(Dd(1.0), s, c);
  // sin(1), cos(1) to 30+ digits: 0.84147098480789650665..., 0.54030230586813971740...
  CHECK(std::abs(s.hi - 0.8414709848078965) < 3e-16);
  CHECK(std::abs(c.hi - 0.5403023058681398) < 3e-16);
  CHECK(std::abs((s * s + c * c - Dd(1.0)).value()) < 1e-30);
}

TEST_CASE("dd complex exp/log/pow") {
  Cdd z{std::complex<double>(0.7, -2.2)};
  Cdd w = exp(log(z));
  CHECK(std::abs(w.value() - std::complex<double>(0.7, -2.2)) < 1e-28);

  // principal power against std in double precision
  Cdd p = pow(Cdd{std::complex<double>(2.0, 1.0)}, Cdd{std::complex<double>(0.3, -0.4)});
  auto ref = std::pow(std::complex<double>(2.0, 1.0), std::complex<double>(0.3, -0.4));
  CHECK(std::abs(p.value() - ref) < 1e-14 * std::abs(ref));
}

TEST_CASE("dd catches cancellation that kills double") {
  // (e^x computed as a big sum) - closed form: the dd result keeps digits
  Dd x(20.0);
  Dd s(1.0), term(1.0);
  for (int k = 1; k <= 120; ++k) {
    term = term * x / Dd(static_cast<double>(k));
    s += term;
  }
  Dd alt(1.0);
  term = Dd(1.0);
  for (int k = 1; k <= 200; ++k) {
    term = term * (-x) / Dd(static_cast<double>(k));
    alt += term;
  }
  // s * alt = e^20 * e^-20 = 1; the alternating sum cancels by e^40
  CHECK(std::abs((s * alt).value() - 1.0) < 1e-14);
}
