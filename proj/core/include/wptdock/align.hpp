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

#pragma once

#include <array>

#include "wptdock/model.hpp"

namespace wptdock {

// Smallest frustum slope angle (degrees, from the vertical) that avoids
// self-locking for friction coefficient mu: arctan(mu). Throws
// DegenerateInput for mu < 0.
double min_slope_angle(double mu);

// True when landing and takeoff are unobstructed, i.e. the slope angle is at
// least arctan(mu). The boundary is inclusive (honored to 1e-9 degrees so
// transcendental round-trips do not flip exact-equality cases).
bool self_locking_check(const FrustumSpec& frustum);

// Per-face coil gaps (mm) for an imperfectly seated inner frustum, rigidly
// translated by (dx, dy) mm and yawed by yaw_deg about the vertical axis.
//
// Geometry conventions: three faces with outward horizontal directions at
// azimuths 180, 300 and 60 degrees (face 0 faces -x); each face leans
// slope_angle_deg from the vertical, coils sit at mid-height. The gap is the
// coil-center separation along the face normal, clamped at zero (no contact
// resolution). Perfect seating gives [0, 0, 0].
//
// Requires face_count == 3, |yaw_deg| <= 60 (snap first), and an offset no
// larger than base_size/2; throws DegenerateInput otherwise.
std::array<double, 3> misalignment_to_gaps(const FrustumSpec& frustum,
                                           double dx_mm, double dy_mm,
                                           double yaw_deg);

// Approach yaw reduced modulo the 120-degree frustum symmetry into
// (-60, 60]. The passive rotational adapter absorbs this residual during
// seating; the function reports the pre-absorption value.
double snap_yaw(double approach_yaw_deg);

struct AlignReport {
  double alpha_deg;
  double mu;
  double alpha_min_deg;
  bool self_locking_ok;
  std::array<double, 3> gaps_mm;
  bool charge_feasible;  // all gaps within the module gap limit
};

AlignReport align_check(const FrustumSpec& frustum, double dx_mm, double dy_mm,
                        double approach_yaw_deg, double gap_limit_mm = 10.0);

}  // namespace wptdock
