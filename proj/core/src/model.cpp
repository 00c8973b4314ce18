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

#include "contact/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>

#include "contact/errors.hpp"

namespace contact {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::kShell3D, "shell3d"},
    {Family::kWell3D, "well3d"},
    {Family::kRing2D, "ring2d"},
    {Family::kWell2D, "well2d"},
    {Family::kDoubleDelta1D, "doubledelta1d"},
    {Family::kWell1D, "well1d"},
}};

bool finite(double v) { return std::isfinite(v); }

}  // namespace

int dimension(Family family) {
  switch (family) {
    case Family::kShell3D:
    case Family::kWell3D:
      return 3;
    case Family::kRing2D:
    case Family::kWell2D:
      return 2;
    case Family::kDoubleDelta1D:
    case Family::kWell1D:
      return 1;
  }
  return 0;
}

bool is_well(Family family) {
  return family == Family::kWell3D || family == Family::kWell2D || family == Family::kWell1D;
}

bool is_two_dimensional(Family family) { return dimension(family) == 2; }

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::erase(lowered, '_');
  std::erase(lowered, '-');
  for (const auto& [f, known] : kFamilyNames) {
    if (lowered == known) return f;
  }
  throw InvalidSpec("unknown potential family '" + std::string(name) + "'");
}

std::string_view to_string(Parity parity) { return parity == Parity::kEven ? "even" : "odd"; }

void Kinematics::validate() const {
  if (!(k > 0.0) || !finite(k)) throw InvalidSpec("wavenumber k must be positive and finite");
}

void PotentialSpec::validate() const {
  if (!finite(omega) || !finite(alpha) || !finite(beta)) {
    throw InvalidSpec("omega, alpha and beta must be finite");
  }
  if (!(a > 0.0) || !finite(a)) throw InvalidSpec("range a must be positive and finite");
  if (is_two_dimensional(family)) {
    if (!(a0 > a) || !finite(a0)) throw InvalidSpec("2D families need a0 > a so that -ln(a/a0) > 0");
  }
  if (is_well(family) && !(omega < 0.0)) {
    throw InvalidSpec("square-well families require omega < 0");
  }
}

PotentialSpec PotentialSpec::with_range(double range) const {
  PotentialSpec copy = *this;
  copy.a = range;
  return copy;
}

double ReducedParams::log_factor() const {
  if (!xi0) throw DomainError("log factor requested for a family without a0");
  return -std::log(xi / *xi0);
}

ReducedParams reduce_at(const PotentialSpec& spec, const Kinematics& kin, double xi) {
  ReducedParams rp;
  rp.family = spec.family;
  rp.xi = xi;
  rp.b = spec.omega * std::pow(kin.k, spec.alpha - 1.0);
  rp.alpha = spec.alpha;
  rp.beta = is_two_dimensional(spec.family) ? spec.beta : 0.0;
  if (is_two_dimensional(spec.family)) {
    rp.xi0 = kin.k * spec.a0;
    if (!(xi < *rp.xi0)) throw DomainError("2D families need xi < xi0 (a < a0)");
  }

  double radicand = 0.0;
  switch (spec.family) {
    case Family::kWell3D:
      radicand = xi * xi - 3.0 * rp.b * std::pow(xi, 1.0 - spec.alpha);
      break;
    case Family::kWell2D:
      radicand = xi * xi - 2.0 * rp.b * std::pow(xi, 1.0 - spec.alpha) *
                               std::pow(rp.log_factor(), -spec.beta);
      break;
    case Family::kWell1D:
      radicand = xi * xi - rp.b * std::pow(xi, 1.0 - spec.alpha);
      break;
    default:
      return rp;
  }
  rp.eta = Eta{std::sqrt(std::abs(radicand)), radicand < 0.0};
  return rp;
}

ReducedParams reduce(const PotentialSpec& spec, const Kinematics& kin) {
  spec.validate();
  kin.validate();
  return reduce_at(spec, kin, kin.k * spec.a);
}

}  // namespace contact
