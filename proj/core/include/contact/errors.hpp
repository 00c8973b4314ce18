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

#ifndef CONTACT_ERRORS_HPP_
#define CONTACT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace contact {

// Argument outside the domain of a special function or formula (order above
// the cap, non-positive argument, xi >= xi0 in the ring formula, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A PotentialSpec or Kinematics record that violates its invariants.
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters for which a closed form is deliberately not continued, e.g. a
// square well with imaginary interior wavenumber.
class UnsupportedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The numerical integrator could not produce a trustworthy phase shift.
class OracleDiagnostic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace contact

#endif  // CONTACT_ERRORS_HPP_
