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

#include "contact/observables.hpp"

#include <cmath>
#include <numbers>

#include "contact/errors.hpp"

namespace contact {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_dimension(const PhaseShiftTable& table, int dim, const char* what) {
  if (dimension(table.family) != dim) {
    throw DomainError(std::string(what) + ": table has dimension " +
                      std::to_string(dimension(table.family)));
  }
}

std::size_t used_entries(const PhaseShiftTable& table) {
  const auto n = static_cast<std::size_t>(table.truncation_index) + 1;
  return std::min(n, table.entries.size());
}

}  // namespace

Complex s_matrix_element(double t) {
  if (std::isinf(t)) return {-1.0, 0.0};
  if (std::abs(t) <= 1.0) return (1.0 + kI * t) / (1.0 - kI * t);
  const double c = 1.0 / t;
  return (c + kI) / (c - kI);
}

Complex s_matrix_minus_one(double t) {
  if (std::isinf(t)) return {-2.0, 0.0};
  if (std::abs(t) <= 1.0) return 2.0 * kI * t / (1.0 - kI * t);
  return 2.0 * kI / (1.0 / t - kI);
}

double sin_squared(double t) {
  if (std::isinf(t)) return 1.0;
  if (std::abs(t) <= 1.0) return t * t / (1.0 + t * t);
  const double c = 1.0 / t;
  return 1.0 / (1.0 + c * c);
}

Amplitude3D::Amplitude3D(const PhaseShiftTable& table) : k_(table.k) {
  require_dimension(table, 3, "Amplitude3D");
  const std::size_t n = used_entries(table);
  terms_.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    terms_.push_back(static_cast<double>(2 * l + 1) * s_matrix_minus_one(table.entries[l].tan_delta));
  }
}

Complex Amplitude3D::operator()(double theta) const {
  const double u = std::cos(theta);
  // Bonnet recurrence inline to avoid re-running it for every l.
  Complex sum{0.0, 0.0};
  double p_prev = 0.0;
  double p = 1.0;
  for (std::size_t l = 0; l < terms_.size(); ++l) {
    sum += terms_[l] * p;
    const double ld = static_cast<double>(l);
    const double p_next = ((2.0 * ld + 1.0) * u * p - ld * p_prev) / (ld + 1.0);
    p_prev = p;
    p = p_next;
  }
  return sum / (2.0 * kI * k_);
}

Amplitude2D::Amplitude2D(const PhaseShiftTable& table) : k_(table.k) {
  require_dimension(table, 2, "Amplitude2D");
  const std::size_t n = used_entries(table);
  terms_.reserve(n);
  for (std::size_t m = 0; m < n; ++m) terms_.push_back(s_matrix_minus_one(table.entries[m].tan_delta));
}

Complex Amplitude2D::operator()(double theta) const {
  Complex sum{0.0, 0.0};
  for (std::size_t m = 0; m < terms_.size(); ++m) {
    const double weight = m == 0 ? 1.0 : 2.0 * std::cos(static_cast<double>(m) * theta);
    sum += terms_[m] * weight;
  }
  return -kI * sum / std::sqrt(2.0 * std::numbers::pi * k_);
}

Complex amplitude_3d(const PhaseShiftTable& table, double theta) { return Amplitude3D(table)(theta); }

double sigma_total_3d(const PhaseShiftTable& table) {
  require_dimension(table, 3, "sigma_total_3d");
  double sum = 0.0;
  const std::size_t n = used_entries(table);
  for (std::size_t l = 0; l < n; ++l) {
    sum += static_cast<double>(2 * l + 1) * sin_squared(table.entries[l].tan_delta);
  }
  return 4.0 * std::numbers::pi / (table.k * table.k) * sum;
}

double differential_cross_section_3d(const PhaseShiftTable& table, double theta) {
  return std::norm(amplitude_3d(table, theta));
}

Complex amplitude_2d(const PhaseShiftTable& table, double theta) { return Amplitude2D(table)(theta); }

double sigma_total_2d(const PhaseShiftTable& table) {
  require_dimension(table, 2, "sigma_total_2d");
  double sum = 0.0;
  const std::size_t n = used_entries(table);
  for (std::size_t m = 0; m < n; ++m) {
    sum += (m == 0 ? 1.0 : 2.0) * sin_squared(table.entries[m].tan_delta);
  }
  return 4.0 / table.k * sum;
}

double differential_cross_section_2d(const PhaseShiftTable& table, double theta) {
  return std::norm(amplitude_2d(table, theta));
}

OneDScattering one_d_scattering(double tan_even, double tan_odd) {
  const Complex s_even = s_matrix_element(tan_even);
  const Complex s_odd = s_matrix_element(tan_odd);
  return {0.5 * (s_even - s_odd), 0.5 * (s_even + s_odd)};
}

OneDScattering one_d_scattering(const PhaseShiftTable& table) {
  require_dimension(table, 1, "one_d_scattering");
  if (table.entries.size() != 2) throw DomainError("one_d_scattering: expected the (+, -) pair");
  return one_d_scattering(table.entries[0].tan_delta, table.entries[1].tan_delta);
}

}  // namespace contact
