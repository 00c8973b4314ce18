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

#include "contact/limits.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <utility>

#include "contact/errors.hpp"
#include "contact/richardson.hpp"
#include "contact/special_functions.hpp"

namespace contact {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn10 = std::numbers::ln10;

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '_' || c == '-' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view name, const std::array<Enum, N>& values, const char* what) {
  const std::string key = normalize(name);
  for (Enum v : values) {
    if (normalize(to_string(v)) == key) return v;
  }
  throw InvalidSpec(std::string("unknown ") + what + ": " + std::string(name));
}

double median(std::vector<double> v) {
  const std::size_t n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  const double upper = *mid;
  if (n % 2 == 1) return upper;
  return 0.5 * (upper + *std::max_element(v.begin(), mid));
}

// Median of pairwise slopes; robust to isolated spikes in the tail.
double theil_sen(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> slopes;
  slopes.reserve(x.size() * (x.size() - 1) / 2);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[j] != x[i]) slopes.push_back((y[j] - y[i]) / (x[j] - x[i]));
    }
  }
  if (slopes.empty()) return std::numeric_limits<double>::quiet_NaN();
  return median(std::move(slopes));
}

struct Sample {
  double log10_xi;
  double log_l;  // ln(ln(xi0/xi)), 2D only
  SignedLog t0;
  std::optional<double> t1;
};

SignedLog signed_log(double v) {
  if (v == 0.0) return {-kInf, 0};
  return {std::log(std::abs(v)), v < 0.0 ? -1 : 1};
}

ChannelFit fit_channel(int index, const std::vector<Sample>& samples, bool two_d) {
  struct Point {
    double x, l;
    SignedLog t;
  };
  std::vector<Point> pts;
  for (const Sample& s : samples) {
    if (index == 0) {
      pts.push_back({s.log10_xi * kLn10, s.log_l, s.t0});
    } else if (s.t1) {
      pts.push_back({s.log10_xi * kLn10, s.log_l, signed_log(*s.t1)});
    }
  }
  ChannelFit fit;
  fit.index = index;
  if (pts.size() < 4) return fit;
  const std::size_t tail = std::min(pts.size(), std::max<std::size_t>(4, (pts.size() + 1) / 2));
  std::vector<Point> t(pts.end() - static_cast<std::ptrdiff_t>(tail), pts.end());
  fit.points = t.size();
  fit.last_value = t.back().t.value();

  std::vector<double> xs, ls, ys;
  for (const Point& p : t) {
    if (!std::isfinite(p.t.log_abs)) continue;
    xs.push_back(p.x);
    ls.push_back(p.l);
    ys.push_back(p.t.log_abs);
  }
  if (xs.size() >= 2) {
    fit.slope = theil_sen(xs, ys);
    if (two_d) fit.log_slope = theil_sen(ls, ys);
  }
  if (t.back().t.sign == 0) {
    fit.behavior = ChannelBehavior::kVanishing;
    return fit;
  }
  if (std::isinf(t.back().t.log_abs)) {
    fit.behavior = ChannelBehavior::kDivergent;
    return fit;
  }
  if (xs.size() < 3) return fit;
  const double p = fit.slope;
  if (p >= kSlopeDecisive) {
    fit.behavior = ChannelBehavior::kVanishing;
  } else if (p <= -kSlopeDecisive) {
    fit.behavior = ChannelBehavior::kDivergent;
  } else if (std::abs(p) < kSlopePlateau) {
    if (two_d) {
      const double q = *fit.log_slope;
      if (q <= -kSlopeDecisive) {
        fit.behavior = ChannelBehavior::kVanishing;
        return fit;
      }
      if (q >= kSlopeDecisive) {
        fit.behavior = ChannelBehavior::kDivergent;
        return fit;
      }
      if (std::abs(q) >= kSlopePlateau) return fit;
    }
    const double last = t.back().t.value();
    const double prev = t[t.size() - 2].t.value();
    if (std::abs(last - prev) < kPlateauTolerance * std::abs(last)) {
      fit.behavior = ChannelBehavior::kFinite;
    }
  }
  return fit;
}

[[noreturn]] void inconclusive(const std::string& why, LimitClassification&& partial) {
  throw InconclusiveClassification("inconclusive classification: " + why, std::move(partial));
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kTrivial:
      return "Trivial";
    case Verdict::kResonantContact:
      return "ResonantContact";
    case Verdict::kTotalTransmission:
      return "TotalTransmission";
    case Verdict::kTotalTransmissionPhasePi:
      return "TotalTransmissionPhasePi";
    case Verdict::kTotalReflectionPhasePi:
      return "TotalReflectionPhasePi";
    case Verdict::kOrdinaryDelta1D:
      return "OrdinaryDelta1D";
  }
  return "?";
}

Verdict parse_verdict(std::string_view name) {
  static constexpr std::array kAll{Verdict::kTrivial,
                                   Verdict::kResonantContact,
                                   Verdict::kTotalTransmission,
                                   Verdict::kTotalTransmissionPhasePi,
                                   Verdict::kTotalReflectionPhasePi,
                                   Verdict::kOrdinaryDelta1D};
  return parse_enum(name, kAll, "verdict");
}

std::string_view to_string(ChannelBehavior behavior) {
  switch (behavior) {
    case ChannelBehavior::kVanishing:
      return "vanishing";
    case ChannelBehavior::kDivergent:
      return "divergent";
    case ChannelBehavior::kFinite:
      return "finite";
    case ChannelBehavior::kUnresolved:
      return "unresolved";
  }
  return "?";
}

ChannelBehavior parse_channel_behavior(std::string_view name) {
  static constexpr std::array kAll{ChannelBehavior::kVanishing, ChannelBehavior::kDivergent,
                                   ChannelBehavior::kFinite, ChannelBehavior::kUnresolved};
  return parse_enum(name, kAll, "channel behavior");
}

std::string_view to_string(ResonanceFamily family) {
  switch (family) {
    case ResonanceFamily::kShell3D:
      return "shell3d";
    case ResonanceFamily::kWell3D:
      return "well3d";
    case ResonanceFamily::kRing2D:
      return "ring2d";
    case ResonanceFamily::kWell2D:
      return "well2d";
    case ResonanceFamily::kDoubleDelta1D:
      return "doubledelta1d";
    case ResonanceFamily::kWell1DOdd:
      return "well1d-odd";
    case ResonanceFamily::kWell1DEven:
      return "well1d-even";
  }
  return "?";
}

ResonanceFamily parse_resonance_family(std::string_view name) {
  static constexpr std::array kAll{ResonanceFamily::kShell3D,       ResonanceFamily::kWell3D,
                                   ResonanceFamily::kRing2D,        ResonanceFamily::kWell2D,
                                   ResonanceFamily::kDoubleDelta1D, ResonanceFamily::kWell1DOdd,
                                   ResonanceFamily::kWell1DEven};
  return parse_enum(name, kAll, "resonance family");
}

// --- sequences --------------------------------------------------------------

XiSequence XiSequence::geometric(double start, double end, double ratio) {
  if (!(start > 0.0) || !(end > 0.0) || !(start > end) || !std::isfinite(start)) {
    throw DomainError("xi sequence needs start > end > 0");
  }
  if (!(ratio > 1.0) || !std::isfinite(ratio)) throw DomainError("xi sequence ratio must exceed 1");
  XiSequence seq;
  const double s = std::log10(start);
  const double e = std::log10(end);
  const double step = std::log10(ratio);
  const auto n = static_cast<std::size_t>(std::floor((s - e) / step + 1e-9));
  if (n > 1000000) throw DomainError("xi sequence too long");
  for (std::size_t i = 0; i <= n; ++i) seq.log10_xi.push_back(s - static_cast<double>(i) * step);
  return seq;
}

void XiSequence::validate() const {
  if (log10_xi.size() < 4) throw DomainError("xi sequence needs at least 4 points");
  for (std::size_t i = 1; i < log10_xi.size(); ++i) {
    if (!(log10_xi[i] < log10_xi[i - 1])) throw DomainError("xi sequence must strictly decrease");
  }
  if (!(log10_xi.front() - log10_xi.back() >= 4.0 - 1e-9)) {
    throw DomainError("xi sequence must span at least 4 decades");
  }
}

XiSequence default_sequence(Family family) {
  if (!is_two_dimensional(family)) return XiSequence::geometric(1e-2, 1e-7, 10.0);
  XiSequence seq;
  for (int j = 0;; ++j) {
    const double decades = 2.0 * std::pow(10.0, j / 10.0);
    if (decades > 434295.0) break;
    seq.log10_xi.push_back(-decades);
  }
  return seq;
}

// --- numerical classification ---------------------------------------------

LimitClassification classify_limit(const PotentialSpec& spec, const Kinematics& kin,
                                   const XiSequence& sequence) {
  spec.validate();
  kin.validate();
  sequence.validate();
  const bool two_d = is_two_dimensional(spec.family);
  const double log10_xi0 = two_d ? std::log10(kin.k * spec.a0) : kInf;

  std::vector<Sample> samples;
  for (double e : sequence.log10_xi) {
    if (e >= log10_xi0) continue;
    Sample s{e, 0.0, {}, std::nullopt};
    const double log_xi = e * kLn10;
    if (two_d) s.log_l = std::log(log10_xi0 * kLn10 - log_xi);
    try {
      if (two_d && log_xi < kDeepLogXi) {
        s.t0 = tan_delta0_2d_log(spec, kin, log_xi);
      } else {
        const double xi = std::pow(10.0, e);
        if (!(xi >= std::numeric_limits<double>::min())) {
          throw DomainError("xi sequence runs below the double range");
        }
        const ReducedParams rp = reduce_at(spec, kin, xi);
        s.t0 = signed_log(tan_delta(0, rp));
        s.t1 = tan_delta(1, rp);
      }
    } catch (const UnsupportedRegime&) {
      break;  // the remaining, smaller xi are out of reach too
    }
    samples.push_back(s);
  }

  LimitClassification out;
  for (const Sample& s : samples) {
    const double xi = std::pow(10.0, s.log10_xi);
    out.evidence.push_back({s.log10_xi, std::isfinite(xi) ? xi : 0.0, s.t0.value(), s.t0.log_abs, s.t1});
  }
  if (samples.size() < 4 || samples.front().log10_xi - samples.back().log10_xi < 4.0 - 1e-9) {
    inconclusive("fewer than 4 decades could be evaluated", std::move(out));
  }
  out.channels = {fit_channel(0, samples, two_d), fit_channel(1, samples, two_d)};
  out.slope = out.channels[0].slope;
  const ChannelBehavior c0 = out.channels[0].behavior;
  const ChannelBehavior c1 = out.channels[1].behavior;
  using CB = ChannelBehavior;

  if (dimension(spec.family) == 1) {
    if (c0 == CB::kVanishing && c1 == CB::kVanishing) {
      out.verdict = Verdict::kTotalTransmission;
    } else if (c0 == CB::kDivergent && c1 == CB::kVanishing) {
      out.verdict = Verdict::kTotalReflectionPhasePi;
    } else if (c0 == CB::kDivergent && c1 == CB::kDivergent) {
      out.verdict = Verdict::kTotalTransmissionPhasePi;
    } else if (c0 == CB::kFinite && c1 == CB::kVanishing) {
      out.verdict = Verdict::kOrdinaryDelta1D;
      out.limit_values = LimitValues{std::nullopt, out.channels[0].last_value, out.channels[1].last_value};
    } else {
      inconclusive("1D channel pair (" + std::string(to_string(c0)) + ", " +
                       std::string(to_string(c1)) + ") has no verdict",
                   std::move(out));
    }
    return out;
  }
  if (c1 != CB::kVanishing) {
    inconclusive("index-1 channel is " + std::string(to_string(c1)), std::move(out));
  }
  if (c0 == CB::kVanishing) {
    out.verdict = Verdict::kTrivial;
  } else if (c0 == CB::kDivergent || c0 == CB::kFinite) {
    out.verdict = Verdict::kResonantContact;
    out.resonant_index = 0;
    if (c0 == CB::kFinite) out.limit_values = LimitValues{out.channels[0].last_value, std::nullopt, std::nullopt};
  } else {
    inconclusive("s-wave slope " + std::to_string(out.slope) + " is ambiguous", std::move(out));
  }
  return out;
}

LimitClassification classify_limit(const PotentialSpec& spec, const Kinematics& kin) {
  return classify_limit(spec, kin, default_sequence(spec.family));
}

// --- analytic rules ---------------------------------------------------------

namespace {

bool near(double x, double y) { return std::abs(x - y) <= kResonanceTolerance; }

// Omega close to -(c_N)^2 scale for some natural N, with c_N = 2N - 1 (odd)
// or N.
bool on_ladder(double omega, double scale, bool odd_ladder) {
  if (!(omega < 0.0)) return false;
  const double c = std::sqrt(-omega / scale);
  const double n = odd_ladder ? std::round((c + 1.0) / 2.0) : std::round(c);
  if (n < 1.0) return false;
  const double cn = odd_ladder ? 2.0 * n - 1.0 : n;
  return near(omega, -cn * cn * scale);
}

bool well1d_odd(double omega) { return on_ladder(omega, kPi * kPi / 4.0, true); }
bool well1d_even(double omega) { return on_ladder(omega, kPi * kPi, false); }

}  // namespace

bool is_resonance(const PotentialSpec& spec) {
  if (spec.alpha != 1.0) return false;
  switch (spec.family) {
    case Family::kShell3D:
    case Family::kDoubleDelta1D:
      return near(spec.omega, -1.0);
    case Family::kRing2D:
    case Family::kWell2D:
      return spec.beta == 1.0 && near(spec.omega, -1.0);
    case Family::kWell3D:
      return on_ladder(spec.omega, kPi * kPi / 12.0, true);
    case Family::kWell1D:
      return well1d_odd(spec.omega) || well1d_even(spec.omega);
  }
  return false;
}

LimitClassification symbolic_classify(const PotentialSpec& spec, const Kinematics& kin) {
  spec.validate();
  kin.validate();
  LimitClassification out;
  if (dimension(spec.family) != 1) {
    if (spec.omega != 0.0 && is_resonance(spec)) {
      out.verdict = Verdict::kResonantContact;
      out.resonant_index = 0;
      if (is_two_dimensional(spec.family)) {
        const double xi0 = kin.k * spec.a0;
        // The well's interior curvature adds -1/2 to the ring's denominator.
        const double shift = spec.family == Family::kWell2D ? -0.5 : 0.0;
        const double limit =
            kPi / (2.0 * special::kEulerGamma + 2.0 * std::log(xi0 / 2.0) + shift);
        out.limit_values = LimitValues{limit, std::nullopt, std::nullopt};
      }
    } else {
      out.verdict = Verdict::kTrivial;
    }
    return out;
  }
  if (spec.omega == 0.0 || spec.alpha < 0.0) {
    out.verdict = Verdict::kTotalTransmission;
  } else if (spec.alpha == 0.0) {
    out.verdict = Verdict::kOrdinaryDelta1D;
    out.limit_values = LimitValues{std::nullopt, -spec.omega / kin.k, 0.0};
  } else if (spec.alpha == 1.0 && spec.family == Family::kWell1D && well1d_even(spec.omega)) {
    out.verdict = Verdict::kTotalTransmission;
  } else if (is_resonance(spec)) {
    out.verdict = Verdict::kTotalTransmissionPhasePi;
  } else {
    out.verdict = Verdict::kTotalReflectionPhasePi;
  }
  return out;
}

ResonanceSet enumerate_resonances(ResonanceFamily family, int n_max) {
  if (n_max < 1) throw DomainError("enumerate_resonances: n_max must be at least 1");
  ResonanceSet set;
  set.family = family;
  auto ladder = [&](double scale, bool odd) {
    for (int n = 1; n <= n_max; ++n) {
      const double c = odd ? 2.0 * n - 1.0 : static_cast<double>(n);
      set.omegas.push_back(-c * c * scale);
    }
  };
  switch (family) {
    case ResonanceFamily::kShell3D:
    case ResonanceFamily::kDoubleDelta1D:
      set.formula = "-1";
      set.omegas = {-1.0};
      break;
    case ResonanceFamily::kRing2D:
    case ResonanceFamily::kWell2D:
      set.formula = "-1";
      set.beta = 1.0;
      set.omegas = {-1.0};
      break;
    case ResonanceFamily::kWell3D:
      set.formula = "-(2N-1)^2 pi^2 / 12";
      ladder(kPi * kPi / 12.0, true);
      break;
    case ResonanceFamily::kWell1DOdd:
      set.formula = "-(2N-1)^2 pi^2 / 4";
      ladder(kPi * kPi / 4.0, true);
      break;
    case ResonanceFamily::kWell1DEven:
      set.formula = "-N^2 pi^2";
      ladder(kPi * kPi, false);
      break;
  }
  return set;
}

// --- half-bound states ------------------------------------------------------

HalfBoundReport half_bound_check(const PotentialSpec& spec) {
  spec.validate();
  const double a = spec.a;
  HalfBoundReport report;
  report.pieces.interior_amplitude = 1.0;
  report.pieces.exterior_amplitude = 1.0;
  // Omega a^(1 - alpha): the coupling in units of the range.
  const double g = spec.omega * std::pow(a, 1.0 - spec.alpha);
  auto cot_residual = [](double x) {
    const double s = std::sin(x);
    return s == 0.0 ? kInf : std::abs(x * std::cos(x) / s);
  };
  auto tan_residual = [](double x) {
    const double c = std::cos(x);
    return c == 0.0 ? kInf : std::abs(x * std::sin(x) / c);
  };
  auto choose = [&](double even, double odd) {
    const bool odd_wins = odd < even;
    report.parity = odd_wins ? Parity::kOdd : Parity::kEven;
    report.residual = odd_wins ? odd : even;
  };

  switch (spec.family) {
    case Family::kShell3D:
      // R = 1 inside, B0 / r outside.
      report.pieces.exterior_amplitude = a;
      report.residual = std::abs(1.0 + g);
      break;
    case Family::kWell3D:
      report.pieces.exterior_amplitude = a;
      report.residual = cot_residual(std::sqrt(-3.0 * g));
      break;
    case Family::kRing2D: {
      // The bounded exterior solution is constant, so R'(a+) = 0 = R'(a-) and
      // the jump must vanish by itself.
      const double log_factor = -std::log(a / spec.a0);
      report.residual = std::abs(g / std::pow(log_factor, spec.beta));
      break;
    }
    case Family::kWell2D: {
      const double log_factor = -std::log(a / spec.a0);
      const double ka = std::sqrt(-2.0 * g / std::pow(log_factor, spec.beta));
      const double j0 = special::bessel_j(0, ka);
      report.residual = j0 == 0.0 ? kInf : std::abs(ka * special::bessel_j(1, ka) / j0);
      break;
    }
    case Family::kDoubleDelta1D:
      // Even: constant inside, no slope to absorb the jump. Odd: x / a inside.
      choose(std::abs(g), std::abs(1.0 + g));
      break;
    case Family::kWell1D: {
      const double ka = std::sqrt(-g);
      choose(tan_residual(ka), cot_residual(ka));
      break;
    }
  }
  report.exists = report.residual <= kHalfBoundTolerance;
  report.pieces.parity = report.parity;
  return report;
}

// --- limiting tables --------------------------------------------------------

LimitTable limit_table(const PotentialSpec& spec, const Kinematics& kin, double xi_end) {
  if (!(xi_end > 0.0) || !std::isfinite(xi_end)) throw DomainError("limit_table: xi_end must be positive");
  LimitTable out;
  out.classification = classify_limit(spec, kin);
  PhaseShiftTable& table = out.table;
  table.family = spec.family;
  table.k = kin.k;
  table.truncation = Truncation::kBelowThreshold;

  if (is_two_dimensional(spec.family)) {
    double t0 = out.classification.evidence.back().tan_delta0;
    switch (out.classification.channels.at(0).behavior) {
      case ChannelBehavior::kVanishing:
        t0 = 0.0;
        break;
      case ChannelBehavior::kDivergent:
        t0 = std::copysign(kInf, t0);
        break;
      default:
        break;
    }
    table.entries = {{0, t0, delta_mod_pi(t0)}, {1, 0.0, 0.0}};
    table.truncation_index = 1;
    return out;
  }

  const std::array<double, 4> factors{8.0, 4.0, 2.0, 1.0};
  std::vector<PhaseShiftTable> tables;
  tables.push_back(build_table_at(spec, kin, factors[0] * xi_end));
  const int n = static_cast<int>(tables[0].entries.size());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    tables.push_back(build_table_at(spec, kin, factors[i] * xi_end, n - 1));
  }
  for (int l = 0; l < n; ++l) {
    const ChannelBehavior behavior =
        l < static_cast<int>(out.classification.channels.size())
            ? out.classification.channels[static_cast<std::size_t>(l)].behavior
            : ChannelBehavior::kUnresolved;
    std::array<double, 4> samples{};
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto& entries = tables[i].entries;
      samples[i] = static_cast<std::size_t>(l) < entries.size() ? entries[static_cast<std::size_t>(l)].tan_delta : 0.0;
    }
    double t = 0.0;
    if (behavior == ChannelBehavior::kDivergent) {
      t = std::copysign(kInf, samples.back());
    } else if (behavior != ChannelBehavior::kVanishing) {
      t = richardson(samples);
    }
    table.entries.push_back({l, t, delta_mod_pi(t)});
  }
  table.truncation_index = n - 1;
  table.truncation = tables[0].truncation;
  return out;
}

// --- audit ------------------------------------------------------------------

std::vector<PotentialSpec> default_audit_grid() {
  std::vector<PotentialSpec> grid;
  const double pi2 = kPi * kPi;
  const double a = 0.3;
  auto add = [&](Family f, double alpha, double beta, double omega) {
    PotentialSpec s;
    s.family = f;
    s.alpha = alpha;
    s.beta = beta;
    s.omega = omega;
    s.a = a;
    s.a0 = is_two_dimensional(f) ? 1.0 : 0.0;
    grid.push_back(s);
  };
  for (double alpha : {-1.0, 0.0, 0.5, 1.0, 1.5, 2.0}) {
    for (double omega : {-1.0, -1.0 + 1e-3, -1.0 - 1e-3, -0.5, 0.7}) add(Family::kShell3D, alpha, 0.0, omega);
    for (int n = 1; n <= 3; ++n) {
      const double r = -(2.0 * n - 1.0) * (2.0 * n - 1.0) * pi2 / 12.0;
      for (double d : {0.0, 1e-3, -1e-3}) add(Family::kWell3D, alpha, 0.0, r + d);
    }
    add(Family::kWell3D, alpha, 0.0, -0.5);
    for (double beta : {-1.0, 0.5, 1.0, 2.0}) {
      for (double omega : {-1.0, -1.0 + 1e-3, -1.0 - 1e-3, -0.5}) {
        add(Family::kRing2D, alpha, beta, omega);
        add(Family::kWell2D, alpha, beta, omega);
      }
    }
    for (double omega : {-1.0, -1.0 + 1e-3, -1.0 - 1e-3, -0.5}) add(Family::kDoubleDelta1D, alpha, 0.0, omega);
    std::vector<double> ladder;
    for (int n = 1; n <= 2; ++n) {
      ladder.push_back(-(2.0 * n - 1.0) * (2.0 * n - 1.0) * pi2 / 4.0);
      ladder.push_back(-n * n * pi2);
    }
    for (double r : ladder) {
      for (double d : {0.0, 1e-3, -1e-3}) add(Family::kWell1D, alpha, 0.0, r + d);
    }
    add(Family::kWell1D, alpha, 0.0, -0.5);
  }
  return grid;
}

namespace {

AuditRow audit_point(const PotentialSpec& spec, const Kinematics& kin) {
  AuditRow row;
  row.spec = spec;
  row.symbolic = symbolic_classify(spec, kin).verdict;
  try {
    const LimitClassification c = classify_limit(spec, kin);
    row.numeric = c.verdict;
    row.slope = c.slope;
  } catch (const InconclusiveClassification& e) {
    row.slope = e.evidence().slope;
  } catch (const std::exception&) {
    // Left without a numeric verdict; counted as a disagreement.
  }
  row.verdicts_agree = row.numeric && *row.numeric == row.symbolic;
  row.resonance = is_resonance(spec);
  row.half_bound = half_bound_check(spec);
  if (is_two_dimensional(spec.family)) {
    row.half_bound_consistent = !(row.resonance && row.half_bound.exists);
  } else {
    row.half_bound_consistent = row.half_bound.exists == row.resonance;
  }
  return row;
}

}  // namespace

AuditReport run_audit(const std::vector<PotentialSpec>& grid, const Kinematics& kin, unsigned threads) {
  kin.validate();
  for (const PotentialSpec& s : grid) s.validate();
  AuditReport report;
  report.rows.resize(grid.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, grid.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) report.rows[i] = audit_point(grid[i], kin);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const AuditRow& row : report.rows) {
    if (!row.passed()) ++report.failures;
  }
  return report;
}

}  // namespace contact
