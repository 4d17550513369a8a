// Copyright 2026 The wptdock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wptdock/align.hpp"

#include <cmath>

#include "wptdock/errors.hpp"

namespace wptdock {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegPerRad = 180.0 / kPi;

// Inclusive-boundary slack for Eq.-style >= comparisons; keeps tan/atan
// round-trips from flipping exact-equality cases.
constexpr double kBoundaryEpsDeg = 1e-9;

void require_valid(const FrustumSpec& f) {
  ValidationReport report = validate(f);
  if (!report.empty()) {
    throw DegenerateInput("invalid frustum: " + format_report(report));
  }
}

}  // namespace

double min_slope_angle(double mu) {
  if (!std::isfinite(mu) || mu < 0) {
    throw DegenerateInput("mu must be >= 0");
  }
  return std::atan(mu) * kDegPerRad;
}

bool self_locking_check(const FrustumSpec& frustum) {
  require_valid(frustum);
  return frustum.slope_angle_deg + kBoundaryEpsDeg >=
         min_slope_angle(frustum.mu);
}

std::array<double, 3> misalignment_to_gaps(const FrustumSpec& frustum,
                                           double dx_mm, double dy_mm,
                                           double yaw_deg) {
  require_valid(frustum);
  if (frustum.face_count != 3) {
    throw DegenerateInput("face_count must be 3 for gap analysis");
  }
  if (std::abs(yaw_deg) > 60.0 + kBoundaryEpsDeg) {
    throw DegenerateInput("yaw must lie in [-60, 60] degrees (snap first)");
  }
  double offset = std::hypot(dx_mm, dy_mm);
  if (!std::isfinite(offset) || offset > frustum.base_size / 2.0) {
    throw DegenerateInput("offset exceeds base_size/2");
  }

  const double alpha = frustum.slope_angle_deg / kDegPerRad;
  const double psi = yaw_deg / kDegPerRad;
  const double cos_alpha = std::cos(alpha);
  // Horizontal distance from the axis to a face at coil (mid) height: base
  // inradius minus the slope inset. Clamped at zero for degenerate shapes.
  double rho = frustum.base_size / (2.0 * std::sqrt(3.0)) -
               0.5 * frustum.height * std::tan(alpha);
  if (rho < 0) rho = 0;

  // Yaw swings the coil center tangentially, which retracts it radially by
  // rho*(1 - cos psi) relative to the mating plane.
  const double yaw_term = rho * (1.0 - std::cos(psi));

  // Outward horizontal face directions at azimuths 180, 300, 60 degrees.
  constexpr double kHalfSqrt3 = 0.86602540378443864676;
  constexpr double kDirX[3] = {-1.0, 0.5, 0.5};
  constexpr double kDirY[3] = {0.0, -kHalfSqrt3, kHalfSqrt3};

  std::array<double, 3> gaps;
  for (int k = 0; k < 3; ++k) {
    double along_normal = dx_mm * kDirX[k] + dy_mm * kDirY[k];
    double g = cos_alpha * (yaw_term - along_normal);
    gaps[k] = g > 0 ? g : 0.0;
  }
  return gaps;
}

double snap_yaw(double approach_yaw_deg) {
  double r = std::remainder(approach_yaw_deg, 120.0);
  if (r <= -60.0) r += 120.0;  // canonical residual in (-60, 60]
  return r;
}

AlignReport align_check(const FrustumSpec& frustum, double dx_mm, double dy_mm,
                        double approach_yaw_deg, double gap_limit_mm) {
  AlignReport report;
  report.alpha_deg = frustum.slope_angle_deg;
  report.mu = frustum.mu;
  report.alpha_min_deg = min_slope_angle(frustum.mu);
  report.self_locking_ok = self_locking_check(frustum);
  report.gaps_mm =
      misalignment_to_gaps(frustum, dx_mm, dy_mm, snap_yaw(approach_yaw_deg));
  report.charge_feasible = true;
  for (double g : report.gaps_mm) {
    if (g > gap_limit_mm) report.charge_feasible = false;
  }
  return report;
}

}  // namespace wptdock
