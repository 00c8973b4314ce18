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

#ifndef CONTACT_PHASE_SHIFTS_HPP_
#define CONTACT_PHASE_SHIFTS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "contact/model.hpp"

namespace contact {

// Closed-form tan(delta) for each potential family at finite a and k. The
// returned value is an extended real: +-infinity means delta = pi/2 (mod pi).
// A denominator smaller than kDivergenceRatio * |numerator| is treated as an
// exact zero.
inline constexpr double kDivergenceRatio = 1e-13;

double tan_delta_shell3d(int l, const ReducedParams& rp);
// Throws UnsupportedRegime for imaginary eta.
double tan_delta_well3d(int l, const ReducedParams& rp);
// Throws DomainError unless 0 < xi < xi0.
double tan_delta_ring2d(int m, const ReducedParams& rp);
double tan_delta_well2d(int m, const ReducedParams& rp);

struct ParityPair {
  double even = 0.0;  // tan(delta_+)
  double odd = 0.0;   // tan(delta_-)
};

// Double-delta or 1D well, selected by rp.family.
ParityPair tan_delta_1d(const ReducedParams& rp);

// Dispatch on rp.family. For 1D families index 0 is the even channel and
// index 1 the odd one.
double tan_delta(int index, const ReducedParams& rp);

// atan(tan_delta) in (-pi/2, pi/2], with +-infinity mapped to pi/2.
double delta_mod_pi(double tan_delta);

// Value sign * exp(log_abs); sign is 0 for an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 0;

  double value() const;
};

// 2D s-wave tan(delta_0) with xi passed as ln(xi), for arguments far below
// the double range. Uses the small-argument forms J_0 = 1,
// N_0 = (2/pi)(ln(xi/2) + gamma), x J_1 = x^2/2, x N_1 = -2/pi, whose
// relative error O(xi^2) is invisible below kDeepLogXi. Throws
// UnsupportedRegime when the 2D well's interior wavenumber exceeds 1e15.
inline constexpr double kDeepLogXi = -69.07755278982137;  // ln(1e-30)
SignedLog tan_delta0_2d_log(const PotentialSpec& spec, const Kinematics& kin, double log_xi);

struct PhaseShiftEntry {
  int index = 0;
  double tan_delta = 0.0;
  double delta = 0.0;  // mod pi

  bool operator==(const PhaseShiftEntry&) const = default;
};

enum class Truncation { kBelowThreshold, kCap };

struct PhaseShiftTable {
  Family family = Family::kShell3D;
  double k = 1.0;
  std::vector<PhaseShiftEntry> entries;
  int truncation_index = 0;
  Truncation truncation = Truncation::kBelowThreshold;

  bool operator==(const PhaseShiftTable&) const = default;
};

// Partial waves are added until two consecutive |tan delta| fall below
// kTableThreshold or the index reaches the cap (200, or l_max_hint when
// smaller). 1D tables always hold exactly the (+, -) pair.
inline constexpr double kTableThreshold = 1e-14;
PhaseShiftTable build_table(const PotentialSpec& spec, const Kinematics& kin,
                            std::optional<int> l_max_hint = std::nullopt);

// Table at an explicit xi (a = xi / k); used by the limit machinery.
PhaseShiftTable build_table_at(const PotentialSpec& spec, const Kinematics& kin, double xi,
                               std::optional<int> l_max_hint = std::nullopt);

// Table assembled from given phase shifts (radians), e.g. for testing the
// observables or feeding in a limiting value. delta = pi/2 maps to tan = inf.
PhaseShiftTable table_from_deltas(Family family, double k, std::span<const double> deltas);

}  // namespace contact

#endif  // CONTACT_PHASE_SHIFTS_HPP_
