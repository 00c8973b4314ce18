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

#include "contact/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "contact/errors.hpp"

namespace contact::special {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesCutoff = 0.5;
// Above this argument J_0, J_1, N_0, N_1 come from the Hankel expansion.
constexpr double kHankelCutoff = 25.0;
constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;
constexpr double kSeriesEps = 1e-17;
constexpr int kMaxSeriesTerms = 200;

void check_order(int n, const char* what) {
  if (n < 0 || n > kMaxOrder) {
    throw DomainError(std::string(what) + ": order " + std::to_string(n) +
                      " outside [0, " + std::to_string(kMaxOrder) + "]");
  }
}

void check_argument(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite");
  }
}

// ---------------------------------------------------------------------------
// Spherical functions.

double spherical_j_series(int l, double x) {
  double prefactor = 1.0;
  for (int i = 1; i <= l && prefactor != 0.0; ++i) prefactor *= x / (2 * i + 1);
  if (prefactor == 0.0) return 0.0;
  const double h = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    term *= h / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return prefactor * sum;
}

double spherical_n_series(int l, double x) {
  double prefactor = -1.0 / x;
  for (int i = 1; i <= l && std::isfinite(prefactor); ++i) {
    prefactor *= (2 * i - 1) / x;
  }
  if (!std::isfinite(prefactor)) return prefactor;
  const double h = 0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    term *= -h / (k * (2.0 * k - 1.0 - 2.0 * l));
    sum += term;
    if (k > l && std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return prefactor * sum;
}

double spherical_j0_closed(double x) { return std::sin(x) / x; }
double spherical_j1_closed(double x) { return (std::sin(x) / x - std::cos(x)) / x; }

// Upward recurrence; stable for l <= x.
double spherical_j_upward(int l, double x) {
  double prev = spherical_j0_closed(x);
  if (l == 0) return prev;
  double cur = spherical_j1_closed(x);
  for (int n = 1; n < l; ++n) {
    const double next = (2 * n + 1) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Miller's downward recurrence normalised to whichever of j_0, j_1 is larger.
double spherical_j_miller(int l, double x) {
  const double top = std::max<double>(l, x);
  const int start = static_cast<int>(top) + 20 + static_cast<int>(std::sqrt(50.0 * top));
  double above = 0.0;  // f_{n+1}
  double cur = 1.0;    // f_n
  double saved = 0.0;
  for (int n = start; n >= 1; --n) {
    const double below = (2 * n + 1) / x * cur - above;
    above = cur;
    cur = below;
    if (n - 1 == l) saved = cur;
    if (std::abs(cur) > kRescaleAbove) {
      cur *= kRescaleBy;
      above *= kRescaleBy;
      saved *= kRescaleBy;
    }
  }
  // cur = f_0, above = f_1
  const double j0 = spherical_j0_closed(x);
  const double j1 = spherical_j1_closed(x);
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / cur : j1 / above;
  return saved * scale;
}

double spherical_j_unchecked(int l, double x) {
  if (x < kSeriesCutoff) return spherical_j_series(l, x);
  if (l <= x) return spherical_j_upward(l, x);
  return spherical_j_miller(l, x);
}

double spherical_n_unchecked(int l, double x) {
  if (x < kSeriesCutoff) return spherical_n_series(l, x);
  double prev = -std::cos(x) / x;
  if (l == 0) return prev;
  double cur = (-std::cos(x) / x - std::sin(x)) / x;
  for (int n = 1; n < l && std::isfinite(cur); ++n) {
    const double next = (2 * n + 1) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Cylindrical functions.

double bessel_j_series(int m, double x) {
  double prefactor = 1.0;
  for (int i = 1; i <= m && prefactor != 0.0; ++i) prefactor *= 0.5 * x / i;
  if (prefactor == 0.0) return 0.0;
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    term *= q / (static_cast<double>(k) * (m + k));
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return prefactor * sum;
}

double n0_series_part(double x) {
  const double q = 0.25 * x * x;
  double power = 1.0;  // (x^2/4)^k / (k!)^2
  double harmonic = 0.0;
  double sum = 0.0;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    power *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    const double term = (k % 2 == 1 ? 1.0 : -1.0) * harmonic * power;
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum;
}

double bessel_n0_series(double x) {
  return 2.0 / kPi * ((std::log(0.5 * x) + kEulerGamma) * bessel_j_series(0, x) + n0_series_part(x));
}

double bessel_n1_series(double x) {
  // psi(k+1) + psi(k+2) = -2 gamma + H_k + H_{k+1}
  const double q = -0.25 * x * x;
  double power = 1.0;  // q^k / (k! (k+1)!)
  double h_k = 0.0;
  double sum = 0.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    if (k > 0) {
      power *= q / (static_cast<double>(k) * (k + 1));
      h_k += 1.0 / k;
    }
    const double psi_sum = -2.0 * kEulerGamma + 2.0 * h_k + 1.0 / (k + 1);
    const double term = psi_sum * power;
    sum += term;
    if (k > 0 && std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return -2.0 / (kPi * x) + 2.0 / kPi * std::log(0.5 * x) * bessel_j_series(1, x) -
         0.5 * x / kPi * sum;
}

// Normalised J_0..J_N by Miller's algorithm with the sum rule
// J_0 + 2 sum_k J_{2k} = 1. N is large enough that J_N is negligible.
std::vector<double> bessel_j_miller_table(int m_needed, double x) {
  const double top = std::max<double>(m_needed, x);
  int start = static_cast<int>(top) + 20 + static_cast<int>(std::sqrt(50.0 * top));
  if (start % 2 == 1) ++start;
  std::vector<double> f(static_cast<std::size_t>(start) + 2, 0.0);
  f[start] = 1.0;
  double sum = 2.0;
  for (int n = start; n >= 1; --n) {
    f[n - 1] = (2.0 * n / x) * f[n] - f[n + 1];
    const int idx = n - 1;
    if (idx % 2 == 0) sum += (idx == 0 ? 1.0 : 2.0) * f[idx];
    if (std::abs(f[idx]) > kRescaleAbove) {
      for (int i = idx; i <= start; ++i) f[i] *= kRescaleBy;
      sum *= kRescaleBy;
    }
  }
  for (double& v : f) v /= sum;
  f.pop_back();
  return f;
}

struct HankelPair {
  double j;
  double n;
};

// Large-argument Hankel expansion for orders 0 and 1.
HankelPair hankel(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  const double z8 = 8.0 * x;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  for (int k = 1; k < 120; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * z8);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    if (k % 2 == 0) {
      p += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    } else {
      q += (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    if (std::abs(term) < kSeriesEps) break;
  }
  // chi = x - (nu/2 + 1/4) pi, expanded so that x is never shifted.
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double r = std::numbers::sqrt2 / 2.0;
  double cos_chi = 0.0;
  double sin_chi = 0.0;
  if (nu == 0) {
    cos_chi = r * (c + s);
    sin_chi = r * (s - c);
  } else {
    cos_chi = r * (s - c);
    sin_chi = -r * (s + c);
  }
  const double amp = std::sqrt(2.0 / (kPi * x));
  return {amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi)};
}

double bessel_j_unchecked(int m, double x) {
  if (x < kSeriesCutoff) return bessel_j_series(m, x);
  if (x < kHankelCutoff) return bessel_j_miller_table(m, x)[m];
  const HankelPair h0 = hankel(0, x);
  if (m == 0) return h0.j;
  const HankelPair h1 = hankel(1, x);
  if (m <= x) {
    double prev = h0.j;
    double cur = h1.j;
    for (int n = 1; n < m; ++n) {
      const double next = (2.0 * n / x) * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // Miller, normalised against the asymptotic J_0 or J_1.
  const std::vector<double> f = bessel_j_miller_table(m, x);
  // The table is normalised by the sum rule; rescale to the Hankel values
  // because the sum rule loses digits when x is large.
  const double scale = std::abs(h0.j) >= std::abs(h1.j) ? h0.j / f[0] : h1.j / f[1];
  return f[m] * scale;
}

std::pair<double, double> bessel_n01(double x) {
  if (x < kSeriesCutoff) return {bessel_n0_series(x), bessel_n1_series(x)};
  if (x >= kHankelCutoff) return {hankel(0, x).n, hankel(1, x).n};
  const std::vector<double> j = bessel_j_miller_table(1, x);
  const int top = static_cast<int>(j.size()) - 1;
  const double log_term = std::log(0.5 * x) + kEulerGamma;
  double even_sum = 0.0;
  double odd_sum = 0.0;
  for (int k = 1; 2 * k + 1 <= top; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    even_sum += sign * j[2 * k] / k;
    odd_sum += sign * (j[2 * k - 1] - j[2 * k + 1]) / k;
  }
  const double n0 = 2.0 / kPi * (log_term * j[0] - 2.0 * even_sum);
  const double n1 = 2.0 / kPi * (-j[0] / x + log_term * j[1] + odd_sum);
  return {n0, n1};
}

double bessel_n_unchecked(int m, double x) {
  const auto [n0, n1] = bessel_n01(x);
  if (m == 0) return n0;
  double prev = n0;
  double cur = n1;
  for (int n = 1; n < m && std::isfinite(cur); ++n) {
    const double next = (2.0 * n / x) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double spherical_j(int l, double x) {
  check_order(l, "spherical_j");
  check_argument(x, "spherical_j");
  return spherical_j_unchecked(l, x);
}

double spherical_n(int l, double x) {
  check_order(l, "spherical_n");
  check_argument(x, "spherical_n");
  return spherical_n_unchecked(l, x);
}

double spherical_j_prime(int l, double x) {
  check_order(l, "spherical_j_prime");
  check_argument(x, "spherical_j_prime");
  return l / x * spherical_j_unchecked(l, x) - spherical_j_unchecked(l + 1, x);
}

double spherical_n_prime(int l, double x) {
  check_order(l, "spherical_n_prime");
  check_argument(x, "spherical_n_prime");
  return l / x * spherical_n_unchecked(l, x) - spherical_n_unchecked(l + 1, x);
}

double bessel_j(int m, double x) {
  check_order(m, "bessel_j");
  check_argument(x, "bessel_j");
  return bessel_j_unchecked(m, x);
}

double bessel_n(int m, double x) {
  check_order(m, "bessel_n");
  check_argument(x, "bessel_n");
  return bessel_n_unchecked(m, x);
}

double bessel_j_prime(int m, double x) {
  check_order(m, "bessel_j_prime");
  check_argument(x, "bessel_j_prime");
  return m / x * bessel_j_unchecked(m, x) - bessel_j_unchecked(m + 1, x);
}

double bessel_n_prime(int m, double x) {
  check_order(m, "bessel_n_prime");
  check_argument(x, "bessel_n_prime");
  return m / x * bessel_n_unchecked(m, x) - bessel_n_unchecked(m + 1, x);
}

double legendre_p(int l, double u) {
  check_order(l, "legendre_p");
  if (!(std::abs(u) <= 1.0)) throw DomainError("legendre_p: |u| must not exceed 1");
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = u;
  for (int n = 1; n < l; ++n) {
    const double next = ((2 * n + 1) * u * cur - n * prev) / (n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double z_minus_sin(double z) {
  if (std::abs(z) >= 1.0) return z - std::sin(z);
  const double z2 = z * z;
  double term = z * z2 / 6.0;
  double sum = term;
  for (int k = 2; k < 40; ++k) {
    term *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j0_minus_one(double x) {
  check_argument(x, "bessel_j0_minus_one");
  if (x >= kSeriesCutoff) return bessel_j_unchecked(0, x) - 1.0;
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum;
}

double bessel_n0_series_part(double x) {
  check_argument(x, "bessel_n0_series_part");
  if (x < kSeriesCutoff) return n0_series_part(x);
  return 0.5 * kPi * bessel_n_unchecked(0, x) -
         (std::log(0.5 * x) + kEulerGamma) * bessel_j_unchecked(0, x);
}

}  // namespace contact::special
