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

#include "contact/phase_shifts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "contact/errors.hpp"
#include "contact/special_functions.hpp"

namespace contact {
namespace {

using special::bessel_j;
using special::bessel_n;
using special::spherical_j;
using special::spherical_n;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Products of an underflowed and an overflowed factor only occur deep in the
// small-argument regime, where the term they feed is negligible.
double mul(double x, double y) { return (x == 0.0 || y == 0.0) ? 0.0 : x * y; }

double ratio(double num, double den) {
  if (num == 0.0) return 0.0;
  if (std::abs(den) < kDivergenceRatio * std::abs(num)) {
    const bool negative = std::signbit(num) != (den != 0.0 && std::signbit(den));
    return negative ? -kInf : kInf;
  }
  return num / den;
}

void check_xi(double xi, const char* what) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError(std::string(what) + ": xi must be positive and finite");
  }
}

double real_eta(const ReducedParams& rp, const char* what) {
  if (!rp.eta) throw DomainError(std::string(what) + ": reduced parameters carry no eta");
  if (rp.eta->imaginary) {
    throw UnsupportedRegime(std::string(what) +
                            ": imaginary eta (repulsive well) is not continued");
  }
  return rp.eta->magnitude;
}

void check_well_order(int l, const char* what) {
  // The well formulas need order l + 1.
  if (l < 0 || l >= special::kMaxOrder) {
    throw DomainError(std::string(what) + ": order outside [0, " +
                      std::to_string(special::kMaxOrder - 1) + "]");
  }
}

}  // namespace

double tan_delta_shell3d(int l, const ReducedParams& rp) {
  const double xi = rp.xi;
  check_xi(xi, "tan_delta_shell3d");
  const double b = rp.b;
  const double jl = spherical_j(l, xi);
  const double num = b * xi * jl * jl;
  if (l == 0) {
    // xi j0 n0 = -sin(2 xi)/(2 xi) = -(1 - g), g = (2 xi - sin 2 xi)/(2 xi).
    const double g = special::z_minus_sin(2.0 * xi) / (2.0 * xi);
    const double den = (-std::pow(xi, rp.alpha - 1.0) - b) + b * g;
    return ratio(num, den);
  }
  const double nl = spherical_n(l, xi);
  const double den = -std::pow(xi, rp.alpha - 1.0) + b * xi * mul(jl, nl);
  return ratio(num, den);
}

double tan_delta_well3d(int l, const ReducedParams& rp) {
  check_well_order(l, "tan_delta_well3d");
  const double xi = rp.xi;
  check_xi(xi, "tan_delta_well3d");
  const double eta = real_eta(rp, "tan_delta_well3d");
  const double j_l_xi = spherical_j(l, xi);
  const double j_l1_xi = spherical_j(l + 1, xi);
  const double j_l_eta = spherical_j(l, eta);
  const double j_l1_eta = spherical_j(l + 1, eta);
  const double num = eta * mul(j_l_xi, j_l1_eta) - xi * mul(j_l1_xi, j_l_eta);
  const double den = eta * mul(spherical_n(l, xi), j_l1_eta) -
                     xi * mul(spherical_n(l + 1, xi), j_l_eta);
  return ratio(num, den);
}

double tan_delta_ring2d(int m, const ReducedParams& rp) {
  const double xi = rp.xi;
  check_xi(xi, "tan_delta_ring2d");
  if (!rp.xi0 || !(xi < *rp.xi0)) throw DomainError("tan_delta_ring2d: requires 0 < xi < xi0");
  const double b = rp.b;
  const double jm = bessel_j(m, xi);
  const double num = b * kPi * jm * jm;
  if (m == 0 && rp.alpha == 1.0 && rp.beta == 1.0 && xi < 0.5) {
    // -2 ln(xi0/xi) + b pi J0 N0 with the logarithms of xi collected so that
    // b = -1 cancels exactly.
    const double log_xi = std::log(xi);
    const double j0m1 = special::bessel_j0_minus_one(xi);
    const double j0sq_m1 = j0m1 * (j0m1 + 2.0);
    const double den = 2.0 * (1.0 + b) * log_xi + 2.0 * b * log_xi * j0sq_m1 -
                       2.0 * std::log(*rp.xi0) +
                       2.0 * b * jm * jm * (special::kEulerGamma - std::numbers::ln2) +
                       2.0 * b * jm * special::bessel_n0_series_part(xi);
    return ratio(num, den);
  }
  const double den = -2.0 * std::pow(xi, rp.alpha - 1.0) * std::pow(rp.log_factor(), rp.beta) +
                     b * kPi * mul(jm, bessel_n(m, xi));
  return ratio(num, den);
}

double tan_delta_well2d(int m, const ReducedParams& rp) {
  check_well_order(m, "tan_delta_well2d");
  const double xi = rp.xi;
  check_xi(xi, "tan_delta_well2d");
  if (!rp.xi0 || !(xi < *rp.xi0)) throw DomainError("tan_delta_well2d: requires 0 < xi < xi0");
  const double eta = real_eta(rp, "tan_delta_well2d");
  const double j_m_eta = bessel_j(m, eta);
  const double j_m1_eta = bessel_j(m + 1, eta);
  const double num = eta * mul(bessel_j(m, xi), j_m1_eta) - xi * mul(bessel_j(m + 1, xi), j_m_eta);
  const double den =
      eta * mul(bessel_n(m, xi), j_m1_eta) - xi * mul(bessel_n(m + 1, xi), j_m_eta);
  return ratio(num, den);
}

ParityPair tan_delta_1d(const ReducedParams& rp) {
  const double xi = rp.xi;
  check_xi(xi, "tan_delta_1d");
  const double s = std::sin(xi);
  const double c = std::cos(xi);
  if (rp.family == Family::kDoubleDelta1D) {
    const double b = rp.b;
    const double xa = std::pow(xi, rp.alpha);
    // b sin(xi) cos(xi) = b xi - b h with h = (2 xi - sin 2 xi) / 2.
    double even_den = 0.0;
    double odd_den = 0.0;
    if (xi < 1.0) {
      const double h = 0.5 * special::z_minus_sin(2.0 * xi);
      even_den = (-xa + b * xi) - b * h;
      odd_den = (xa + b * xi) - b * h;
    } else {
      even_den = -xa + b * s * c;
      odd_den = xa + b * s * c;
    }
    return {ratio(b * c * c, even_den), ratio(-b * s * s, odd_den)};
  }
  if (rp.family == Family::kWell1D) {
    const double eta = real_eta(rp, "tan_delta_1d");
    const double se = std::sin(eta);
    const double ce = std::cos(eta);
    // Multiplied through by cos(xi) cos(eta) so that poles of tan never appear.
    const double even = ratio(eta * se * c - xi * s * ce, xi * c * ce + eta * s * se);
    const double odd = ratio(xi * se * c - eta * s * ce, eta * c * ce + xi * s * se);
    return {even, odd};
  }
  throw DomainError("tan_delta_1d: family is not one-dimensional");
}

double tan_delta(int index, const ReducedParams& rp) {
  switch (rp.family) {
    case Family::kShell3D:
      return tan_delta_shell3d(index, rp);
    case Family::kWell3D:
      return tan_delta_well3d(index, rp);
    case Family::kRing2D:
      return tan_delta_ring2d(index, rp);
    case Family::kWell2D:
      return tan_delta_well2d(index, rp);
    case Family::kDoubleDelta1D:
    case Family::kWell1D: {
      if (index != 0 && index != 1) throw DomainError("1D channels are 0 (even) and 1 (odd)");
      const ParityPair pair = tan_delta_1d(rp);
      return index == 0 ? pair.even : pair.odd;
    }
  }
  throw DomainError("tan_delta: unknown family");
}

double delta_mod_pi(double tan_delta) {
  if (std::isinf(tan_delta)) return kPi / 2.0;
  return std::atan(tan_delta);
}

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

namespace {

SignedLog to_signed_log(double v) {
  if (v == 0.0) return {-kInf, 0};
  return {std::log(std::abs(v)), v < 0.0 ? -1 : 1};
}

SignedLog divide(SignedLog num, SignedLog den) {
  if (num.sign == 0) return {-kInf, 0};
  if (den.sign == 0 || den.log_abs - num.log_abs < std::log(kDivergenceRatio)) {
    return {kInf, den.sign == 0 ? num.sign : num.sign * den.sign};
  }
  return {num.log_abs - den.log_abs, num.sign * den.sign};
}

// -exp(log_a) + b, with log_a allowed far outside the double range.
SignedLog minus_exp_plus(double log_a, double b) {
  if (log_a > 700.0) return {log_a, -1};
  if (log_a < -745.0) return to_signed_log(b);
  return to_signed_log(-std::exp(log_a) + b);
}

double log_add_exp(double x, double y) {
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

}  // namespace

SignedLog tan_delta0_2d_log(const PotentialSpec& spec, const Kinematics& kin, double log_xi) {
  if (!is_two_dimensional(spec.family)) throw DomainError("tan_delta0_2d_log: 2D families only");
  spec.validate();
  kin.validate();
  const double log_xi0 = std::log(kin.k * spec.a0);
  if (!(log_xi < log_xi0)) throw DomainError("tan_delta0_2d_log: requires xi < xi0");
  const double b = spec.omega * std::pow(kin.k, spec.alpha - 1.0);
  if (b == 0.0) return {-kInf, 0};
  const double big_l = log_xi0 - log_xi;
  const double g = special::kEulerGamma - std::numbers::ln2;

  if (spec.family == Family::kRing2D) {
    SignedLog den;
    if (spec.alpha == 1.0 && spec.beta == 1.0) {
      den = to_signed_log(2.0 * (1.0 + b) * log_xi - 2.0 * log_xi0 + 2.0 * b * g);
    } else {
      const double log_term = std::numbers::ln2 + (spec.alpha - 1.0) * log_xi +
                              spec.beta * std::log(big_l);
      den = minus_exp_plus(log_term, 2.0 * b * (log_xi + g));
    }
    return divide(to_signed_log(b * kPi), den);
  }

  // Well: eta^2 = xi^2 + w with w = 2|b| xi^(1 - alpha) L^(-beta).
  const double log_w = std::log(-2.0 * b) + (1.0 - spec.alpha) * log_xi -
                       spec.beta * std::log(big_l);
  const double log_eta2 = log_add_exp(2.0 * log_xi, log_w);
  if (log_eta2 > 2.0 * std::log(1e15)) {
    throw UnsupportedRegime("tan_delta0_2d_log: interior wavenumber beyond 1e15");
  }
  const double eta2 = std::exp(log_eta2);
  if (log_eta2 < 2.0 * std::log(1e-8)) {
    // eta J1(eta) - (xi^2/2) J0(eta) = w/2 up to O(eta^2) relative.
    const SignedLog num{log_w - std::numbers::ln2, 1};
    const double den = (2.0 / kPi) * (1.0 + (log_xi + g) * 0.5 * eta2);
    return divide(num, to_signed_log(den));
  }
  const double eta = std::sqrt(eta2);
  const double j0 = bessel_j(0, eta);
  const double eta_j1 = eta * bessel_j(1, eta);
  const double num = eta_j1 - 0.5 * std::exp(2.0 * log_xi) * j0;
  const double den = (2.0 / kPi) * ((log_xi + g) * eta_j1 + j0);
  return divide(to_signed_log(num), to_signed_log(den));
}

PhaseShiftTable build_table_at(const PotentialSpec& spec, const Kinematics& kin, double xi,
                               std::optional<int> l_max_hint) {
  const ReducedParams rp = reduce_at(spec, kin, xi);
  PhaseShiftTable table;
  table.family = spec.family;
  table.k = kin.k;
  if (dimension(spec.family) == 1) {
    const ParityPair pair = tan_delta_1d(rp);
    table.entries = {{0, pair.even, delta_mod_pi(pair.even)}, {1, pair.odd, delta_mod_pi(pair.odd)}};
    table.truncation_index = 1;
    table.truncation = Truncation::kCap;
    return table;
  }
  int cap = is_well(spec.family) ? special::kMaxOrder - 1 : special::kMaxOrder;
  if (l_max_hint) {
    if (*l_max_hint < 0) throw DomainError("l_max_hint must be non-negative");
    cap = std::min(cap, *l_max_hint);
  }
  int small_in_a_row = 0;
  for (int l = 0; l <= cap; ++l) {
    const double t = tan_delta(l, rp);
    table.entries.push_back({l, t, delta_mod_pi(t)});
    small_in_a_row = std::abs(t) < kTableThreshold ? small_in_a_row + 1 : 0;
    if (small_in_a_row == 2) {
      table.truncation_index = l;
      table.truncation = Truncation::kBelowThreshold;
      return table;
    }
  }
  table.truncation_index = cap;
  table.truncation = Truncation::kCap;
  return table;
}

PhaseShiftTable build_table(const PotentialSpec& spec, const Kinematics& kin,
                            std::optional<int> l_max_hint) {
  spec.validate();
  kin.validate();
  return build_table_at(spec, kin, kin.k * spec.a, l_max_hint);
}

PhaseShiftTable table_from_deltas(Family family, double k, std::span<const double> deltas) {
  if (deltas.empty()) throw DomainError("table_from_deltas: need at least one phase shift");
  if (dimension(family) == 1 && deltas.size() != 2) {
    throw DomainError("table_from_deltas: 1D tables hold exactly two phase shifts");
  }
  PhaseShiftTable table;
  table.family = family;
  table.k = k;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    double t = std::tan(deltas[i]);
    if (std::abs(t) > 1e15) t = std::copysign(kInf, t);
    table.entries.push_back({static_cast<int>(i), t, delta_mod_pi(t)});
  }
  table.truncation_index = static_cast<int>(deltas.size()) - 1;
  table.truncation = Truncation::kCap;
  return table;
}

}  // namespace contact
