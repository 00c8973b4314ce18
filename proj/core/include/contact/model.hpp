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

#ifndef CONTACT_MODEL_HPP_
#define CONTACT_MODEL_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace contact {

// Natural units hbar = mu = 1 throughout: E = k^2 / 2, v = k.

enum class Family {
  kShell3D,        // Omega delta(r - a) / a^alpha
  kWell3D,         // 3 Omega / a^(alpha+1) inside r < a
  kRing2D,         // Omega delta(r - a) / (a^alpha [-ln(a/a0)]^beta)
  kWell2D,         // 2 Omega / (a^(alpha+1) [-ln(a/a0)]^beta) inside r < a
  kDoubleDelta1D,  // Omega [delta(x - a) + delta(x + a)] / a^alpha
  kWell1D,         // Omega / a^(alpha+1) inside |x| < a
};

int dimension(Family family);
bool is_well(Family family);
bool is_two_dimensional(Family family);
std::string_view to_string(Family family);
// Accepts the names produced by to_string (case-insensitive). Throws
// InvalidSpec on anything else.
Family parse_family(std::string_view name);

enum class Parity { kEven, kOdd };
std::string_view to_string(Parity parity);

struct Kinematics {
  double k = 1.0;

  // Throws InvalidSpec unless k is positive and finite.
  void validate() const;
  double energy() const { return 0.5 * k * k; }
  double velocity() const { return k; }
};

struct PotentialSpec {
  Family family = Family::kShell3D;
  double omega = 0.0;
  double alpha = 1.0;
  double beta = 0.0;  // ring/2D well only
  double a = 1.0;
  double a0 = 0.0;  // ring/2D well only; must exceed a

  // Throws InvalidSpec when an invariant is violated.
  void validate() const;

  // Copy of this spec with a different range a.
  PotentialSpec with_range(double range) const;

  bool operator==(const PotentialSpec&) const = default;
};

// sqrt of a possibly negative radicand, stored as magnitude plus a flag.
struct Eta {
  double magnitude = 0.0;
  bool imaginary = false;

  bool operator==(const Eta&) const = default;
};

struct ReducedParams {
  Family family = Family::kShell3D;
  double xi = 0.0;                 // k a
  std::optional<double> xi0;       // k a0, 2D families
  double b = 0.0;                  // Omega k^(alpha - 1)
  double alpha = 1.0;
  double beta = 0.0;
  std::optional<Eta> eta;          // well families

  // -ln(xi / xi0); only meaningful for 2D families.
  double log_factor() const;
};

// Reduced (dimensionless) parameters at the spec's own range.
ReducedParams reduce(const PotentialSpec& spec, const Kinematics& kin);

// Same as reduce() but with xi given directly, i.e. a = xi / k. Used when a
// sequence of xi is walked towards zero without round-tripping through a.
ReducedParams reduce_at(const PotentialSpec& spec, const Kinematics& kin, double xi);

// Zero-energy or finite-energy wavefunction amplitudes on either side of the
// matching radius.
struct WavefunctionPieces {
  double interior_amplitude = 0.0;
  double exterior_amplitude = 0.0;
  std::optional<Parity> parity;

  bool operator==(const WavefunctionPieces&) const = default;
};

}  // namespace contact

#endif  // CONTACT_MODEL_HPP_
