#include "doctest.h"

#include <cmath>

#include "stratwave/profiles.hpp"

using namespace stratwave;

namespace {

// central 4th-order finite difference of the k-1st derivative
double fd_deriv(const ScalarProfile& p, int k, double y, double h) {
  return (p.deriv(k - 1, y - 2 * h) - 8.0 * p.deriv(k - 1, y - h) +
          8.0 * p.deriv(k - 1, y + h) - p.deriv(k - 1, y + 2 * h)) /
         (12.0 * h);
}

}  // namespace

TEST_CASE("analytic derivatives agree with finite differences") {
  const double h = 1e-4;
  for (auto kind : {ProfileKind::gaussian, ProfileKind::bump, ProfileKind::sech2}) {
    ScalarProfile p(kind, 1.3, 0.2, 1.4);
    for (double y : {-0.9, -0.3, 0.0, 0.45, 1.1}) {
      for (int k = 1; k <= 4; ++k) {
        const double fd = fd_deriv(p, k, y, h);
        const double an = p.deriv(k, y);
        CHECK(an == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
      }
    }
  }
}

TEST_CASE("gaussian second derivative at center") {
  ScalarProfile g(ProfileKind::gaussian, 1.0);
  CHECK(g.deriv(0, 0.0) == doctest::Approx(1.0));
  CHECK(g.deriv(2, 0.0) == doctest::Approx(-2.0));
}

TEST_CASE("bump vanishes smoothly at its support edge") {
  ScalarProfile b(ProfileKind::bump, 2.0, 0.0, 1.0);
  for (int k = 0; k <= 4; ++k) {
    CHECK(b.deriv(k, 1.0) == 0.0);
    CHECK(b.deriv(k, -1.2) == 0.0);
    CHECK(std::abs(b.deriv(k, 0.999)) < 1e-80);
  }
}

TEST_CASE("sobolev_q: zero data and analytic gaussian value") {
  auto params = derive_params(0.4, 1);
  GridSpec grid = GridSpec::standard();

  InitialDataProfile zero;
  CHECK(sobolev_q(zero, 0, params, grid) == 0.0);

  // omega0 = e^{-y^2}: ||f||^2 + ||f'||^2 + ||f''||^2 = 5 sqrt(pi/2)
  InitialDataProfile gw = InitialDataProfile::gaussian_omega();
  const double expected = std::sqrt(5.0 * std::sqrt(M_PI / 2.0));
  const double got = sobolev_q(gw, 0, params, grid);
  CHECK(got == doctest::Approx(expected).epsilon(1e-10));

  // Richardson-extrapolated trapezoid at 4x resolution as an independent check
  GridSpec fine{-20.0, 20.0, 8193};
  const double got_fine = sobolev_q(gw, 0, params, fine);
  CHECK(got == doctest::Approx(got_fine).epsilon(1e-9));
}

TEST_CASE("sobolev_q monotone in j") {
  auto params = derive_params(0.4, 1);
  GridSpec grid = GridSpec::standard();
  InitialDataProfile d = InitialDataProfile::gaussian_pair(0.7, 1.1);
  const double q0 = sobolev_q(d, 0, params, grid);
  const double q1 = sobolev_q(d, 1, params, grid);
  const double q2 = sobolev_q(d, 2, params, grid);
  CHECK(q0 <= q1);
  CHECK(q1 <= q2);
}

TEST_CASE("sobolev_q grid refinement stays within 1%") {
  auto params = derive_params(1.0, 2);
  for (auto kind : {ProfileKind::gaussian, ProfileKind::bump, ProfileKind::sech2}) {
    InitialDataProfile d{ScalarProfile(kind, 1.0), ScalarProfile(kind, 0.5)};
    GridSpec base = GridSpec::standard();
    GridSpec fine{-20.0, 20.0, 4097};
    const double a = sobolev_q(d, 1, params, base);
    const double b = sobolev_q(d, 1, params, fine);
    CHECK(std::abs(a - b) / b < 0.01);
  }
}

TEST_CASE("domain-too-small error when data does not decay") {
  auto params = derive_params(0.4, 1);
  GridSpec tiny{-2.0, 2.0, 64};
  InitialDataProfile gw = InitialDataProfile::gaussian_omega();
  CHECK_THROWS_AS(sobolev_q(gw, 0, params, tiny), DomainTooSmallError);
}

TEST_CASE("scaled data scales linearly") {
  InitialDataProfile d = InitialDataProfile::gaussian_pair(1.0, 2.0);
  auto s = d.scaled(3.0);
  CHECK(s.omega0(0.4) == doctest::Approx(3.0 * d.omega0(0.4)));
  CHECK(s.rho0(-1.1) == doctest::Approx(3.0 * d.rho0(-1.1)));
}
