#pragma once

#include <array>

#include "stratwave/types.hpp"

namespace stratwave {

enum class ProfileKind { gaussian, bump, sech2, zero };

// Closed-form scalar profile with analytic derivatives of order 0..4.
// The kernel G_m needs two derivatives of the data and the H^4 norms four;
// analytic derivatives avoid amplifying grid noise through Delta_m.
class ScalarProfile {
 public:
  ScalarProfile() : kind_(ProfileKind::zero) {}
  ScalarProfile(ProfileKind kind, double amplitude, double center = 0.0,
                double width = 1.0);

  static ScalarProfile zero() { return ScalarProfile(); }

  // k-th derivative at y, 0 <= k <= 4
  double deriv(int k, double y) const;
  double operator()(double y) const { return deriv(0, y); }

  // value and derivatives 0..4 at once
  std::array<double, 5> derivs(double y) const;

  bool is_zero() const { return kind_ == ProfileKind::zero || amplitude_ == 0.0; }

  // half-width (in y) outside of which the profile and its derivatives are
  // below ~1e-30 relative and may be treated as zero
  double support_radius() const;

  ProfileKind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double center() const { return center_; }
  double width() const { return width_; }

 private:
  ProfileKind kind_;
  double amplitude_ = 0.0;
  double center_ = 0.0;
  double width_ = 1.0;
};

// Initial vorticity and density profiles of one x-mode.
struct InitialDataProfile {
  ScalarProfile omega0;
  ScalarProfile rho0;

  bool is_zero() const { return omega0.is_zero() && rho0.is_zero(); }

  static InitialDataProfile gaussian_omega(double amplitude = 1.0) {
    return {ScalarProfile(ProfileKind::gaussian, amplitude), ScalarProfile::zero()};
  }
  static InitialDataProfile gaussian_rho(double amplitude = 1.0) {
    return {ScalarProfile::zero(), ScalarProfile(ProfileKind::gaussian, amplitude)};
  }
  static InitialDataProfile gaussian_pair(double amp_omega, double amp_rho) {
    return {ScalarProfile(ProfileKind::gaussian, amp_omega),
            ScalarProfile(ProfileKind::gaussian, amp_rho)};
  }

  InitialDataProfile scaled(double a) const;
};

// Checks that both profiles decay below `tol` at the grid edges.
void require_edge_decay(const InitialDataProfile& data, const GridSpec& grid,
                        double tol = 1e-12);

// Q_{j,m} = ||rho0||_{H^{2+j}} + ||omega0||_{H^{2+j}} with the H^s norm taken
// as the l2 sum of L2 norms of derivatives 0..s, trapezoid rule on the grid.
double sobolev_q(const InitialDataProfile& data, int j, const FlowParams& params,
                 const GridSpec& grid);

}  // namespace stratwave
