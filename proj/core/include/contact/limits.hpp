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

#ifndef CONTACT_LIMITS_HPP_
#define CONTACT_LIMITS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "contact/model.hpp"
#include "contact/phase_shifts.hpp"

namespace contact {

enum class Verdict {
  kTrivial,
  kResonantContact,
  kTotalTransmission,
  kTotalTransmissionPhasePi,
  kTotalReflectionPhasePi,
  kOrdinaryDelta1D,
};

std::string_view to_string(Verdict verdict);
Verdict parse_verdict(std::string_view name);

// Decreasing xi values stored as log10(xi), so that 2D sequences can run
// below the smallest double.
struct XiSequence {
  std::vector<double> log10_xi;

  // start > end > 0, ratio > 1; the end point is included when it falls
  // on the grid within rounding.
  static XiSequence geometric(double start, double end, double ratio);
  // Throws DomainError unless strictly decreasing and spanning >= 4 decades.
  void validate() const;
  std::size_t size() const { return log10_xi.size(); }
  bool operator==(const XiSequence&) const = default;
};

// 3D and 1D: 1e-2 .. 1e-7, ratio 10. 2D: 54 points from 1e-2 to
// xi = 10^-399052 (ln(1/xi) ~ 9.2e5) with log10(1/xi) spaced geometrically,
// 10 per decade of log10(1/xi).
XiSequence default_sequence(Family family);

enum class ChannelBehavior { kVanishing, kDivergent, kFinite, kUnresolved };
std::string_view to_string(ChannelBehavior behavior);
ChannelBehavior parse_channel_behavior(std::string_view name);

struct ChannelFit {
  int index = 0;
  ChannelBehavior behavior = ChannelBehavior::kUnresolved;
  double slope = 0.0;                   // d ln|tan| / d ln xi over the tail
  std::optional<double> log_slope;      // d ln|tan| / d ln L, 2D only
  double last_value = 0.0;
  std::size_t points = 0;

  bool operator==(const ChannelFit&) const = default;
};

struct EvidencePoint {
  double log10_xi = 0.0;
  double xi = 0.0;          // 0 when below the double range
  double tan_delta0 = 0.0;  // may under/overflow; log_abs_tan_delta0 is exact
  double log_abs_tan_delta0 = 0.0;
  std::optional<double> tan_delta1;  // absent where only the s-wave is evaluated

  bool operator==(const EvidencePoint&) const = default;
};

struct LimitValues {
  std::optional<double> tan_delta0;      // 2D finite s-wave limit
  std::optional<double> tan_delta_even;  // 1D alpha = 0
  std::optional<double> tan_delta_odd;

  bool operator==(const LimitValues&) const = default;
};

struct LimitClassification {
  Verdict verdict = Verdict::kTrivial;
  std::optional<int> resonant_index;
  std::optional<LimitValues> limit_values;
  double slope = 0.0;  // channel 0 slope, repeated for convenience
  std::vector<ChannelFit> channels;
  std::vector<EvidencePoint> evidence;

  bool operator==(const LimitClassification&) const = default;
};

// Raised when the fitted behaviour does not match any verdict. Carries the
// partially filled classification (channels and evidence).
class InconclusiveClassification : public std::runtime_error {
 public:
  InconclusiveClassification(const std::string& what, LimitClassification evidence)
      : std::runtime_error(what), evidence_(std::move(evidence)) {}
  const LimitClassification& evidence() const { return evidence_; }

 private:
  LimitClassification evidence_;
};

// Slope thresholds: >= +kSlopeDecisive vanishes, <= -kSlopeDecisive
// diverges, |slope| < kSlopePlateau with a stable tail is a finite limit.
inline constexpr double kSlopeDecisive = 0.25;
inline constexpr double kSlopePlateau = 0.1;
inline constexpr double kPlateauTolerance = 0.05;

// Numerical a -> 0 classification from tan(delta) along the sequence.
LimitClassification classify_limit(const PotentialSpec& spec, const Kinematics& kin,
                                   const XiSequence& sequence);
LimitClassification classify_limit(const PotentialSpec& spec, const Kinematics& kin);

// Rule-based classification from the analytic conditions. kin only enters
// the limiting values (xi0 = k a0 in 2D, Omega/k in 1D).
inline constexpr double kResonanceTolerance = 1e-9;
LimitClassification symbolic_classify(const PotentialSpec& spec, const Kinematics& kin = {});

enum class ResonanceFamily { kShell3D, kWell3D, kRing2D, kWell2D, kDoubleDelta1D, kWell1DOdd, kWell1DEven };
std::string_view to_string(ResonanceFamily family);
ResonanceFamily parse_resonance_family(std::string_view name);

struct ResonanceSet {
  ResonanceFamily family = ResonanceFamily::kShell3D;
  double alpha = 1.0;
  std::optional<double> beta;  // 1 for the 2D families
  std::string formula;
  std::vector<double> omegas;

  bool operator==(const ResonanceSet&) const = default;
};

// Throws DomainError when n_max < 1.
ResonanceSet enumerate_resonances(ResonanceFamily family, int n_max);

// True when (alpha, beta, Omega) sits on a resonance of the family, within
// kResonanceTolerance in Omega.
bool is_resonance(const PotentialSpec& spec);

struct HalfBoundReport {
  bool exists = false;
  std::optional<Parity> parity;
  WavefunctionPieces pieces;
  double residual = 0.0;

  bool operator==(const HalfBoundReport&) const = default;
};

inline constexpr double kHalfBoundTolerance = 1e-10;
// Zero-energy solution at the spec's own a, interior normalised to 1 at the
// matching point; residual is a times the log-derivative mismatch.
HalfBoundReport half_bound_check(const PotentialSpec& spec);

// Limiting phase shifts. Channels the classifier found vanishing are 0 and
// divergent ones +-inf; finite channels and the unclassified higher waves
// are Richardson-extrapolated over xi_end * {8, 4, 2, 1}. A finite 2D
// s-wave converges logarithmically, so it takes the deepest point of the
// classification sequence; higher 2D waves are zero.
inline constexpr double kDefaultLimitXi = 1e-4;
struct LimitTable {
  LimitClassification classification;
  PhaseShiftTable table;
};
LimitTable limit_table(const PotentialSpec& spec, const Kinematics& kin,
                       double xi_end = kDefaultLimitXi);

struct AuditRow {
  PotentialSpec spec;
  std::optional<Verdict> numeric;  // empty when inconclusive
  Verdict symbolic = Verdict::kTrivial;
  bool verdicts_agree = false;
  bool resonance = false;
  HalfBoundReport half_bound;
  // 3D/1D: half-bound exists iff resonance. 2D: no half-bound at a resonance.
  bool half_bound_consistent = false;
  double slope = 0.0;

  bool passed() const { return verdicts_agree && half_bound_consistent; }
  bool operator==(const AuditRow&) const = default;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
  bool operator==(const AuditReport&) const = default;
};

// Six alpha values, resonant / detuned / generic Omega per family, four beta
// values in 2D; a = 0.3 and a0 = 1 for the half-bound checks.
std::vector<PotentialSpec> default_audit_grid();

// Rows come back in grid order whatever the thread count (0 = hardware).
AuditReport run_audit(const std::vector<PotentialSpec>& grid, const Kinematics& kin = {},
                      unsigned threads = 1);

}  // namespace contact

#endif  // CONTACT_LIMITS_HPP_
