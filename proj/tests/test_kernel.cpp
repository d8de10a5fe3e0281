#include "doctest.h"

#include <cmath>
#include <random>

#include "stratwave/kernel.hpp"

using namespace stratwave;

namespace {
KernelContext gaussian_ctx(double beta = 0.4, int m = 1) {
  return KernelContext(derive_params(beta, m), InitialDataProfile::gaussian_pair(1.0, 1.0));
}
}  // namespace

TEST_CASE("g_kernel: zero data vanishes") {
  KernelContext ctx(derive_params(0.4, 1), InitialDataProfile{});
  CHECK(g_kernel(ctx, 0.3, 1.2, -0.5) == Complex(0.0));
  CHECK(h_source(ctx, 0.2, 0.1, 0.05, +1) == Complex(0.0));
}

TEST_CASE("g_kernel: gaussian rho data at the origin gives -3") {
  KernelContext ctx(derive_params(0.4, 1), InitialDataProfile::gaussian_rho());
  // rho0''(0) - rho0(0) = -2 - 1 = -3
  CHECK(g_kernel(ctx, 0.0, 0.0, 0.0).real() == doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("g_kernel: exact translation invariance (the section-2 identity)") {
  auto ctx = gaussian_ctx();
  std::minstd_rand rng(42);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (double h : {0.1, 1.7, -3.0}) {
    for (int k = 0; k < 20; ++k) {
      const double eta = u(rng), xi = u(rng), y = u(rng);
      const Complex a = g_kernel(ctx, eta + h, xi, y + h);
      const Complex b = g_kernel(ctx, eta, xi, y);
      CHECK(a == b);  // bitwise: same composite argument
    }
  }
}

TEST_CASE("g_kernel: linearity in the data") {
  auto params = derive_params(0.4, 1);
  KernelContext one(params, InitialDataProfile::gaussian_pair(1.0, 1.0));
  KernelContext three(params, InitialDataProfile::gaussian_pair(1.0, 1.0).scaled(3.0));
  for (double y : {-1.0, 0.3, 2.2}) {
    CHECK(g_kernel(three, 0.4, 1.1, y).real() ==
          doctest::Approx(3.0 * g_kernel(one, 0.4, 1.1, y).real()).epsilon(1e-13));
  }
}

TEST_CASE("g_kernel_deta: matches finite differences in eta, order >= 1.9") {
  auto ctx = gaussian_ctx();
  const double eta = 0.37, xi = 0.81, y = -0.45;
  for (int order : {1, 2}) {
    double err[2];
    int i = 0;
    for (double h : {1e-3, 5e-4}) {
      Complex fd;
      if (order == 1) {
        fd = (g_kernel(ctx, eta + h, xi, y) - g_kernel(ctx, eta - h, xi, y)) / (2.0 * h);
      } else {
        fd = (g_kernel(ctx, eta + h, xi, y) - 2.0 * g_kernel(ctx, eta, xi, y) +
              g_kernel(ctx, eta - h, xi, y)) /
             (h * h);
      }
      err[i++] = std::abs(fd - g_kernel_deta(ctx, eta, xi, y, order));
    }
    const double order_obs = std::log(err[0] / err[1]) / std::log(2.0);
    CHECK(order_obs >= 1.9);
  }
  // relative accuracy of the analytic value at h = 1e-4
  const double h = 1e-4;
  const Complex fd =
      (g_kernel(ctx, eta + h, xi, y) - g_kernel(ctx, eta - h, xi, y)) / (2.0 * h);
  const Complex an = g_kernel_deta(ctx, eta, xi, y, 1);
  CHECK(std::abs(fd - an) / std::abs(an) < 1e-6);
}

TEST_CASE("g_kernel_deta equals -d_y G pointwise") {
  auto ctx = gaussian_ctx(1.0, 2);
  const double eta = -0.6, xi = 1.4, y = 0.9, h = 1e-5;
  const Complex dy =
      (g_kernel(ctx, eta, xi, y + h) - g_kernel(ctx, eta, xi, y - h)) / (2.0 * h);
  const Complex de = g_kernel_deta(ctx, eta, xi, y, 1);
  CHECK(std::abs(de + dy) < 1e-8);
}

TEST_CASE("h_source: epsilon-free for pure rho data, relation to G at eps=0") {
  auto params = derive_params(0.4, 1);
  KernelContext rho_only(params, InitialDataProfile::gaussian_rho());
  const Complex a = h_source(rho_only, 0.3, -2.0, 0.1, +1);
  const Complex b = h_source(rho_only, 0.3, 5.0, 0.7, -1);
  CHECK(a == b);  // independent of y0 and eps

  // G_m(eta, xi, y) = H^0(xi + y - eta, y - eta)
  auto ctx = gaussian_ctx();
  for (double eta : {-0.7, 0.4}) {
    for (double xi : {0.2, 1.5}) {
      const double y = 0.35;
      const Complex g = g_kernel(ctx, eta, xi, y);
      const Complex h0 = h_source(ctx, xi + y - eta, y - eta, 0.0, +1);
      CHECK(std::abs(g - h0) < 1e-13);
    }
  }
}

TEST_CASE("g_kernel: decay at the support edge") {
  auto ctx = gaussian_ctx();
  CHECK(std::abs(g_kernel(ctx, 0.0, 0.0, 12.0)) < 1e-50);
  CHECK(std::abs(g_kernel(ctx, 30.0, 1.0, 0.0)) < 1e-100);
}
