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

#include "contact/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "contact/errors.hpp"
#include "contact/richardson.hpp"
#include "contact/special_functions.hpp"

namespace contact {
namespace {

constexpr double kPi = std::numbers::pi;

// Potential in units where the equation reads u'' = (U + centrifugal - k^2) u.
struct Profile {
  double inner = 0.0;  // U on [lo, hi)
  double lo = 0.0;
  double hi = 0.0;
};

double log_factor(const PotentialSpec& spec) { return -std::log(spec.a / spec.a0); }

double coupling_scale(const PotentialSpec& spec) {
  double s = std::pow(spec.a, -spec.alpha);
  if (is_two_dimensional(spec.family)) s /= std::pow(log_factor(spec), spec.beta);
  return s;
}

Profile well_profile(const PotentialSpec& spec) {
  const double inv = coupling_scale(spec) / spec.a;  // 1 / (a^(alpha+1) [L^beta])
  const int d = dimension(spec.family);
  return {static_cast<double>(d) * spec.omega * inv, 0.0, spec.a};
}

Profile bump_profile(const PotentialSpec& spec, double w) {
  return {spec.omega * coupling_scale(spec) / w, spec.a - 0.5 * w, spec.a + 0.5 * w};
}

double delta_from_tan(double t) { return std::isinf(t) ? kPi / 2.0 : std::atan(t); }

// Free exterior solutions (F regular-like, G irregular-like) such that
// u = c (F - tan(delta) G).
void free_pair(int dim, int index, double k, double r, double& f, double& g) {
  const double x = k * r;
  if (dim == 3) {
    f = r * special::spherical_j(index, x);
    g = r * special::spherical_n(index, x);
  } else if (dim == 2) {
    const double s = std::sqrt(r);
    f = s * special::bessel_j(index, x);
    g = s * special::bessel_n(index, x);
  } else if (index == 0) {
    f = std::cos(x);
    g = std::sin(x);
  } else {
    f = std::sin(x);
    g = -std::cos(x);
  }
}

// Power series of the regular solution in a constant potential, without the
// r^(l+1) (3D) or r^(m+1/2) (2D) prefactor.
double regular_series(int dim, int index, double kappa2, double r) {
  double term = 1.0;
  double sum = 1.0;
  const double r2 = r * r;
  for (int j = 1; j < 200; ++j) {
    const double denom = dim == 3 ? 2.0 * j * (2.0 * j + 2.0 * index + 1.0) : 4.0 * j * (j + index);
    term *= -kappa2 * r2 / denom;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double integrate(const PotentialSpec& spec, const Kinematics& kin, int index, const Profile& prof,
                 double h, double r_max, double h_far) {
  const int dim = dimension(spec.family);
  const double k2 = kin.k * kin.k;
  const auto lo_node = static_cast<long>(std::llround(prof.lo / h));
  const auto hi_node = static_cast<long>(std::llround(prof.hi / h));
  double centrifugal = 0.0;
  if (dim == 3) centrifugal = index * (index + 1.0);
  if (dim == 2) centrifugal = index * index - 0.25;

  auto q_at = [&](long i) {
    const double r = static_cast<double>(i) * h;
    double u = 0.0;
    if (i > lo_node && i < hi_node) u = prof.inner;
    if ((i == lo_node && lo_node > 0) || i == hi_node) u = 0.5 * prof.inner;  // breakpoint average
    if (i == 0 && lo_node == 0) u = prof.inner;
    if (lo_node == hi_node) u = 0.0;
    return u + (dim == 1 ? 0.0 : centrifugal / (r * r)) - k2;
  };

  // Two starting nodes from the series, a quarter of the way to the first
  // breakpoint so that the 1/r^2 singularity is well resolved.
  const double u_origin = lo_node == 0 ? prof.inner : 0.0;
  const double kappa2 = k2 - u_origin;
  const long first_break = lo_node > 0 ? lo_node : hi_node;
  const long i0 = std::max<long>(dim == 1 ? 1 : 2, first_break / 4 + 1);
  const double r_prev = static_cast<double>(i0 - 1) * h;
  const double r_cur = static_cast<double>(i0) * h;
  double u_prev = 0.0;
  double u_cur = 0.0;
  if (dim == 1) {
    const double kappa = std::sqrt(std::abs(kappa2));
    auto even = [&](double x) { return kappa2 >= 0.0 ? std::cos(kappa * x) : std::cosh(kappa * x); };
    auto odd = [&](double x) {
      if (kappa == 0.0) return x;
      return (kappa2 >= 0.0 ? std::sin(kappa * x) : std::sinh(kappa * x)) / kappa;
    };
    u_prev = index == 0 ? even(r_prev) : odd(r_prev);
    u_cur = index == 0 ? even(r_cur) : odd(r_cur);
  } else {
    // Prefactor taken relative to r_prev to stay clear of underflow.
    const double power = dim == 3 ? index + 1.0 : index + 0.5;
    u_prev = regular_series(dim, index, kappa2, r_prev);
    u_cur = std::pow(r_cur / r_prev, power) * regular_series(dim, index, kappa2, r_cur);
  }

  // Fine steps up to twice the outer breakpoint; beyond it the potential is
  // free and the step doubles whenever it is small compared with r, up to
  // h_far. Long runs at a tiny step lose digits to round-off at small k.
  const long coarse_node = 2 * hi_node;
  const double r_match = r_max - kPi / (2.0 * kin.k);
  if (r_match <= static_cast<double>(coarse_node) * h) {
    throw OracleDiagnostic("oracle: r_max too small for matching");
  }
  auto q_free = [&](double r) { return (dim == 1 ? 0.0 : centrifugal / (r * r)) - k2; };
  long node = i0;  // position in units of h
  long stride = 1;
  int since_change = 1;
  double u_back2 = 0.0;
  double u1 = 0.0;
  double r1 = 0.0;
  bool have_first = false;
  const double h_far_units = std::max(1.0, h_far / h);
  while (static_cast<double>(node) * h < r_max - 0.5 * h) {
    const double step = static_cast<double>(stride) * h;
    double qp, qc, qn;
    if (node + stride <= coarse_node) {
      qp = q_at(node - stride);
      qc = q_at(node);
      qn = q_at(node + stride);
    } else {
      const double r = static_cast<double>(node) * h;
      qp = q_free(r - step);
      qc = q_free(r);
      qn = q_free(r + step);
    }
    const double c = step * step / 12.0;
    const double u_next =
        (2.0 * (1.0 + 5.0 * c * qc) * u_cur - (1.0 - c * qp) * u_prev) / (1.0 - c * qn);
    u_back2 = u_prev;
    u_prev = u_cur;
    u_cur = u_next;
    node += stride;
    ++since_change;
    if (std::abs(u_cur) > 1e200) {
      u_back2 *= 1e-200;
      u_prev *= 1e-200;
      u_cur *= 1e-200;
      u1 *= 1e-200;
    }
    const double r = static_cast<double>(node) * h;
    if (!have_first && r >= r_match) {
      u1 = u_cur;
      r1 = r;
      have_first = true;
    }
    if (node >= coarse_node && since_change >= 2 && 2.0 * stride <= h_far_units &&
        r >= 200.0 * 2.0 * step) {
      u_prev = u_back2;
      stride *= 2;
      since_change = 0;
    }
  }
  const double r2 = static_cast<double>(node) * h;
  const double u2 = u_cur;
  if (!have_first || r2 - r1 < 0.25 * kPi / kin.k) {
    throw OracleDiagnostic("oracle: matching radii too close");
  }
  double f1, g1, f2, g2;
  free_pair(dim, index, kin.k, r1, f1, g1);
  free_pair(dim, index, kin.k, r2, f2, g2);
  const double num = u1 * f2 - u2 * f1;
  const double den = u1 * g2 - u2 * g1;
  const double scale = std::abs(u1 * f2) + std::abs(u2 * f1) + std::abs(u1 * g2) + std::abs(u2 * g1);
  if (!(scale > 0.0) || !std::isfinite(scale)) throw OracleDiagnostic("oracle: degenerate matching");
  if (std::abs(den) < 1e-14 * scale) return kPi / 2.0;
  return delta_from_tan(num / den);
}

void check_index(const PotentialSpec& spec, int index) {
  if (dimension(spec.family) == 1) {
    if (index != 0 && index != 1) throw DomainError("oracle: 1D index must be 0 (even) or 1 (odd)");
  } else if (index < 0 || index > 50) {
    throw DomainError("oracle: index outside [0, 50]");
  }
}

double far_step(const Kinematics& kin, const IntegrationConfig& cfg) {
  return 2.0 * kPi / kin.k / cfg.points_per_scale;
}

// Snap h down so that a / h is an integer.
double snap_step(double a, double h) { return a / std::ceil(a / h - 1e-9); }

}  // namespace

IntegrationConfig resolve_config(const PotentialSpec& spec, const Kinematics& kin,
                                 const IntegrationConfig& cfg) {
  spec.validate();
  kin.validate();
  if (cfg.points_per_scale < 200) throw OracleDiagnostic("oracle: points_per_scale must be >= 200");
  IntegrationConfig out = cfg;
  const double r_floor = std::max(10.0 / kin.k, 5.0 * spec.a);
  if (out.r_max == 0.0) out.r_max = r_floor;
  if (out.r_max < r_floor * (1.0 - 1e-12)) {
    throw OracleDiagnostic("oracle: r_max must be >= max(10/k, 5a)");
  }
  const double bound = std::min(spec.a, 2.0 * kPi / kin.k) / 200.0;
  if (out.step == 0.0) {
    double scale = std::min(spec.a, 2.0 * kPi / kin.k);
    if (is_well(spec.family)) {
      const double k_in2 = kin.k * kin.k - well_profile(spec).inner;
      if (k_in2 > 0.0) scale = std::min(scale, 2.0 * kPi / std::sqrt(k_in2));
    }
    out.step = scale / cfg.points_per_scale;
  } else if (out.step > bound * (1.0 + 1e-12)) {
    throw OracleDiagnostic("oracle: step must be <= min(a, 2 pi/k)/200");
  }
  out.step = snap_step(spec.a, out.step);
  out.r_max = std::ceil(out.r_max / out.step - 1e-9) * out.step;
  return out;
}

double oracle_phase_shift(const PotentialSpec& spec, const Kinematics& kin, int index,
                          const IntegrationConfig& cfg) {
  if (!is_well(spec.family)) throw DomainError("oracle_phase_shift: well families only");
  check_index(spec, index);
  const IntegrationConfig c = resolve_config(spec, kin, cfg);
  return integrate(spec, kin, index, well_profile(spec), c.step, c.r_max, far_step(kin, c));
}

RegularizedShift oracle_shell_regularized(const PotentialSpec& spec, const Kinematics& kin,
                                          int index, double width, const IntegrationConfig& cfg) {
  if (is_well(spec.family)) throw DomainError("oracle_shell_regularized: delta families only");
  check_index(spec, index);
  if (!(width > 0.0) || width > spec.a / 50.0 * (1.0 + 1e-12)) {
    throw DomainError("oracle_shell_regularized: width must lie in (0, a/50]");
  }
  const IntegrationConfig base = resolve_config(spec, kin, cfg);
  RegularizedShift out;
  // w = a / M and a step dividing w / 2 keep both bump edges on the grid.
  const double m = std::ceil(spec.a / width - 1e-9);
  out.width = spec.a / m;
  for (int i = 0; i < 3; ++i) {
    const double w = out.width / std::pow(2.0, i);
    const double half = 0.5 * w;
    const double hs = half / std::ceil(half / std::min(base.step, w / 32.0) - 1e-9);
    const double r_max = std::ceil(base.r_max / hs) * hs;
    out.samples[static_cast<std::size_t>(i)] =
        spec.omega == 0.0 ? 0.0 : integrate(spec, kin, index, bump_profile(spec, w), hs, r_max, far_step(kin, base));
  }
  // Unwrap onto the branch of the coarsest sample.
  for (std::size_t i = 1; i < 3; ++i) {
    out.samples[i] += kPi * std::round((out.samples[0] - out.samples[i]) / kPi);
  }
  const double delta = richardson(out.samples);
  out.error_estimate = richardson_error(out.samples);
  if (!std::isfinite(delta) || out.error_estimate > 1e-3) {
    throw OracleDiagnostic("oracle: width extrapolation did not settle (estimate " +
                           std::to_string(out.error_estimate) + ")");
  }
  double d = std::remainder(delta, kPi);
  if (d <= -kPi / 2.0) d += kPi;
  out.delta = d;
  return out;
}

}  // namespace contact
