// Copyright 2026 The contactscatter Authors.
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

#ifndef CONTACT_ORACLE_HPP_
#define CONTACT_ORACLE_HPP_

#include <array>

#include "contact/model.hpp"

namespace contact {

// Direct integration of the radial (or 1D) equation u'' = Q(r) u with the
// Numerov scheme. Zero fields mean "choose automatically".
struct IntegrationConfig {
  double r_max = 0.0;  // outer matching radius; >= 10/k and >= 5a
  double step = 0.0;   // <= min(a, 2 pi/k)/200; snapped so that a is a node
  int points_per_scale = 2000;

  bool operator==(const IntegrationConfig&) const = default;
};

// Filled-in configuration for a given problem. Throws OracleDiagnostic if an
// explicit r_max or step violates the bounds above.
IntegrationConfig resolve_config(const PotentialSpec& spec, const Kinematics& kin,
                                 const IntegrationConfig& cfg);

// delta mod pi in (-pi/2, pi/2] for a well family. index is l (3D), m (2D)
// or 0/1 for the even/odd channel (1D). Throws DomainError for the delta
// families.
double oracle_phase_shift(const PotentialSpec& spec, const Kinematics& kin, int index,
                          const IntegrationConfig& cfg = {});

struct RegularizedShift {
  double delta = 0.0;                 // extrapolated, mod pi
  std::array<double, 3> samples{};    // at w, w/2, w/4 (unwrapped)
  double width = 0.0;                 // w actually used (a / integer)
  double error_estimate = 0.0;
};

// Delta shell/ring/double delta replaced by a rectangular bump of width w
// and the same integral, then extrapolated w -> 0 over w, w/2, w/4. Requires
// w <= a/50. Throws OracleDiagnostic when the extrapolation does not settle.
RegularizedShift oracle_shell_regularized(const PotentialSpec& spec, const Kinematics& kin,
                                          int index, double width,
                                          const IntegrationConfig& cfg = {});

}  // namespace contact

#endif  // CONTACT_ORACLE_HPP_
