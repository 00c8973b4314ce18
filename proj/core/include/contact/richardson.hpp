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

#ifndef CONTACT_RICHARDSON_HPP_
#define CONTACT_RICHARDSON_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "contact/errors.hpp"

namespace contact {

// Richardson extrapolation to h -> 0 of samples taken at h, h/r, h/r^2, ...
// (coarsest first), assuming an error expansion c1 h^p + c2 h^(p+1) + ...
// with p = first_order. Returns the corner of the Neville tableau.
inline double richardson(std::span<const double> samples, double ratio = 2.0, int first_order = 1) {
  if (samples.empty()) throw DomainError("richardson: no samples");
  if (!(ratio > 1.0)) throw DomainError("richardson: ratio must exceed 1");
  std::vector<double> row(samples.begin(), samples.end());
  for (std::size_t level = 1; level < row.size(); ++level) {
    const double factor = std::pow(ratio, first_order + static_cast<int>(level) - 1);
    for (std::size_t i = row.size() - 1; i >= level; --i) {
      row[i] = row[i] + (row[i] - row[i - 1]) / (factor - 1.0);
    }
  }
  return row.back();
}

// Difference between the two highest-order estimates; a cheap error proxy.
inline double richardson_error(std::span<const double> samples, double ratio = 2.0,
                               int first_order = 1) {
  if (samples.size() < 2) return 0.0;
  return std::abs(richardson(samples, ratio, first_order) -
                  richardson(samples.subspan(1), ratio, first_order));
}

}  // namespace contact

#endif  // CONTACT_RICHARDSON_HPP_
