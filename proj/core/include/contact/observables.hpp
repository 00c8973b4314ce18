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

#ifndef CONTACT_OBSERVABLES_HPP_
#define CONTACT_OBSERVABLES_HPP_

#include <complex>
#include <vector>

#include "contact/phase_shifts.hpp"

namespace contact {

using Complex = std::complex<double>;

// exp(2i delta) and exp(2i delta) - 1 from tan(delta), exact for tan = 0 and
// tan = +-inf.
Complex s_matrix_element(double tan_delta);
Complex s_matrix_minus_one(double tan_delta);
// sin^2(delta) from tan(delta).
double sin_squared(double tan_delta);

class Amplitude3D {
 public:
  // Throws DomainError unless the table is three-dimensional.
  explicit Amplitude3D(const PhaseShiftTable& table);

  double k() const { return k_; }
  // (2l + 1)(exp(2i delta_l) - 1), l = 0 .. truncation_index.
  const std::vector<Complex>& partial_terms() const { return terms_; }
  // f(theta), theta in [0, pi].
  Complex operator()(double theta) const;

 private:
  double k_;
  std::vector<Complex> terms_;
};

class Amplitude2D {
 public:
  explicit Amplitude2D(const PhaseShiftTable& table);

  double k() const { return k_; }
  // exp(2i delta_|m|) - 1 for |m| = 0 .. truncation_index.
  const std::vector<Complex>& partial_terms() const { return terms_; }
  // f(theta), theta in [0, 2 pi). Negative m reuse delta_|m|.
  Complex operator()(double theta) const;

 private:
  double k_;
  std::vector<Complex> terms_;
};

Complex amplitude_3d(const PhaseShiftTable& table, double theta);
double sigma_total_3d(const PhaseShiftTable& table);
double differential_cross_section_3d(const PhaseShiftTable& table, double theta);

Complex amplitude_2d(const PhaseShiftTable& table, double theta);
double sigma_total_2d(const PhaseShiftTable& table);
double differential_cross_section_2d(const PhaseShiftTable& table, double theta);

struct OneDScattering {
  Complex reflection;
  Complex transmission;
};

// R = (S+ - S-)/2, T = (S+ + S-)/2. Infinite arguments mean delta = pi/2.
OneDScattering one_d_scattering(double tan_even, double tan_odd);
// Throws DomainError unless the table is one-dimensional.
OneDScattering one_d_scattering(const PhaseShiftTable& table);

}  // namespace contact

#endif  // CONTACT_OBSERVABLES_HPP_
