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

#ifndef CONTACT_SPECIAL_FUNCTIONS_HPP_
#define CONTACT_SPECIAL_FUNCTIONS_HPP_

// Bessel-type functions of integer order and real positive argument, plus
// Legendre polynomials. Below x = 0.5 everything is summed from ascending
// series so that leading small-argument behaviour survives to x ~ 1e-300.
//
// All functions are pure and thread-safe.

namespace contact::special {

// Largest order accepted by the public functions.
inline constexpr int kMaxOrder = 200;

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Spherical Bessel functions j_l(x), n_l(x) (n_0(x) = -cos(x)/x).
double spherical_j(int l, double x);
double spherical_n(int l, double x);
double spherical_j_prime(int l, double x);
double spherical_n_prime(int l, double x);

// Cylindrical Bessel functions J_m(x) and Neumann functions N_m(x) = Y_m(x).
double bessel_j(int m, double x);
double bessel_n(int m, double x);
double bessel_j_prime(int m, double x);
double bessel_n_prime(int m, double x);

// Legendre polynomial P_l(u), |u| <= 1.
double legendre_p(int l, double u);

// Cancellation-free pieces used where a formula subtracts nearly equal
// quantities at small argument.

// z - sin(z).
double z_minus_sin(double z);
// J_0(x) - 1.
double bessel_j0_minus_one(double x);
// The non-logarithmic part S(x) of N_0:
//   N_0(x) = (2/pi) [ (ln(x/2) + gamma) J_0(x) + S(x) ],
//   S(x)   = sum_{k>=1} (-1)^(k+1) H_k (x^2/4)^k / (k!)^2.
// Summed directly below x = 0.5; above that it is recovered from N_0 and J_0.
double bessel_n0_series_part(double x);

}  // namespace contact::special

#endif  // CONTACT_SPECIAL_FUNCTIONS_HPP_
