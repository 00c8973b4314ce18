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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "contact/errors.hpp"
#include "contact/phase_shifts.hpp"
#include "contact/special_functions.hpp"
#include "mp_series.hpp"

namespace {

using namespace contact;
using mp_series::Real;
using std::numbers::pi;

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kGamma = special::kEulerGamma;

// 50-digit evaluations of the shell and 3D well formulas.
Real mp_sph_j(int l, const Real& x) {
  const Real p = boost::math::constants::pi<Real>();
  return sqrt(p / (2 * x)) * mp_series::bessel_j_nu(Real(l) + Real("0.5"), x);
}
Real mp_sph_n(int l, const Real& x) {
  const Real p = boost::math::constants::pi<Real>();
  const Real v = sqrt(p / (2 * x)) * mp_series::bessel_j_nu(-Real(l) - Real("0.5"), x);
  return l % 2 == 0 ? Real(-v) : v;
}

double mp_shell(int l, double alpha, double b, double xi) {
  const Real X(xi), B(b);
  const Real j = mp_sph_j(l, X);
  return static_cast<double>(B * X * j * j / (-pow(X, Real(alpha) - 1) + B * X * j * mp_sph_n(l, X)));
}

double mp_well3d(int l, double alpha, double b, double xi) {
  const Real X(xi), B(b);
  const Real E = sqrt(X * X - 3 * B * pow(X, 1 - Real(alpha)));
  const Real num = E * mp_sph_j(l, X) * mp_sph_j(l + 1, E) - X * mp_sph_j(l + 1, X) * mp_sph_j(l, E);
  const Real den = E * mp_sph_n(l, X) * mp_sph_j(l + 1, E) - X * mp_sph_n(l + 1, X) * mp_sph_j(l, E);
  return static_cast<double>(num / den);
}

ReducedParams shell(double b, double alpha, double xi) {
  return reduce_at({Family::kShell3D, b, alpha}, {1.0}, xi);
}

TEST(Shell3D, FreeParticle) {
  for (int l = 0; l < 10; ++l) EXPECT_EQ(tan_delta_shell3d(l, shell(0.0, 1.0, 0.2)), 0.0);
}

TEST(Shell3D, ResonantSWave) {
  const double xi = 1e-3;
  const double t = tan_delta_shell3d(0, shell(-1.0, 1.0, xi));
  EXPECT_NEAR(xi * t, 1.5, 1.5e-5);
  EXPECT_NEAR(t / mp_shell(0, 1.0, -1.0, xi), 1.0, 1e-10);
}

TEST(Shell3D, PWaveIsSuppressed) {
  const double t = tan_delta_shell3d(1, shell(-1.0, 1.0, 1e-2));
  EXPECT_LT(std::abs(t), 1e-5);
  EXPECT_NEAR(t / mp_shell(1, 1.0, -1.0, 1e-2), 1.0, 1e-10);
}

TEST(Shell3D, MatchesExtendedPrecision) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> lx(-4.0, 0.3), al(-1.0, 2.0), bb(-3.0, 3.0);
  std::uniform_int_distribution<int> ll(0, 5);
  for (int i = 0; i < 150; ++i) {
    const int l = ll(rng);
    const double xi = std::pow(10.0, lx(rng));
    const double alpha = al(rng);
    const double b = bb(rng);
    const double want = mp_shell(l, alpha, b, xi);
    const double got = tan_delta_shell3d(l, shell(b, alpha, xi));
    // Compare phases so that near-poles do not dominate.
    EXPECT_NEAR(std::atan(got), std::atan(want), 1e-11) << l << " " << xi << " " << alpha << " " << b;
  }
}

// b xi^(1-alpha) is what enters; any (alpha', b') with the same product
// gives the same phase shift.
TEST(Shell3D, AlphaScalingIdentity) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> lx(-3.0, 0.0), al(-1.0, 2.0), bb(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double xi = std::pow(10.0, lx(rng));
    const double alpha = al(rng), alpha2 = al(rng), b = bb(rng);
    const double b2 = b * std::pow(xi, (1.0 - alpha) - (1.0 - alpha2));
    for (int l : {0, 1, 3}) {
      const double t1 = tan_delta_shell3d(l, shell(b, alpha, xi));
      const double t2 = tan_delta_shell3d(l, shell(b2, alpha2, xi));
      EXPECT_NEAR(std::atan(t1), std::atan(t2), 1e-12);
    }
  }
}

TEST(Shell3D, DivergesOnExactCancellation) {
  // xi j0 n0 -> -1 as xi -> 0; at b = -1, alpha = 1 the denominator is
  // O(xi^2) but never exactly zero, so the value stays finite and large.
  const double t = tan_delta_shell3d(0, shell(-1.0, 1.0, 1e-9));
  EXPECT_TRUE(std::isfinite(t));
  EXPECT_NEAR(t * 1e-9, 1.5, 1e-9);
}

ReducedParams well3d(double omega, double alpha, double xi) {
  return reduce_at({Family::kWell3D, omega, alpha}, {1.0}, xi);
}

TEST(Well3D, FreeLimitVanishes) {
  for (int l = 0; l < 8; ++l) {
    EXPECT_LE(std::abs(tan_delta_well3d(l, well3d(-1e-300, 1.0, 0.3))), 1e-15);
  }
}

TEST(Well3D, ResonanceDivergesLikeInverseXi) {
  const double omega = -pi * pi / 12;
  const double t3 = tan_delta_well3d(0, well3d(omega, 1.0, 1e-3));
  const double t4 = tan_delta_well3d(0, well3d(omega, 1.0, 1e-4));
  EXPECT_GT(std::abs(t3), 1e2);
  EXPECT_NEAR(t4 / t3, 10.0, 1e-3);
}

TEST(Well3D, GenericStrengthVanishes) {
  EXPECT_LT(std::abs(tan_delta_well3d(0, well3d(-0.5, 1.0, 1e-3))), 1e-2);
}

TEST(Well3D, MatchesExtendedPrecision) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> lx(-3.0, 0.0), al(0.0, 2.0), om(-10.0, -0.01);
  std::uniform_int_distribution<int> ll(0, 4);
  for (int i = 0; i < 100; ++i) {
    const int l = ll(rng);
    const double xi = std::pow(10.0, lx(rng));
    const double alpha = al(rng), omega = om(rng);
    const auto rp = well3d(omega, alpha, xi);
    if (rp.eta->magnitude > 30.0) continue;
    const double want = mp_well3d(l, alpha, omega, xi);
    EXPECT_NEAR(std::atan(tan_delta_well3d(l, rp)), std::atan(want), 1e-10)
        << l << " " << xi << " " << alpha << " " << omega;
  }
}

TEST(Well3D, SymmetricWhenEtaEqualsXi) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> lx(-6.0, 0.5);
  for (int i = 0; i < 100; ++i) {
    ReducedParams rp;
    rp.family = Family::kWell3D;
    rp.xi = std::pow(10.0, lx(rng));
    rp.eta = Eta{rp.xi, false};
    for (int l : {0, 1, 2, 5}) EXPECT_EQ(tan_delta_well3d(l, rp), 0.0);
    rp.family = Family::kWell2D;
    rp.xi0 = 10.0 * rp.xi;
    for (int m : {0, 1, 2, 5}) EXPECT_EQ(tan_delta_well2d(m, rp), 0.0);
    rp.family = Family::kWell1D;
    const ParityPair p = tan_delta_1d(rp);
    EXPECT_NEAR(p.even, 0.0, 1e-15);
    EXPECT_NEAR(p.odd, 0.0, 1e-15);
  }
}

TEST(Wells, ImaginaryEtaIsRejected) {
  ReducedParams rp;
  rp.xi = 0.1;
  rp.eta = Eta{0.3, true};
  rp.family = Family::kWell3D;
  EXPECT_THROW(tan_delta_well3d(0, rp), UnsupportedRegime);
  rp.family = Family::kWell1D;
  EXPECT_THROW(tan_delta_1d(rp), UnsupportedRegime);
  rp.family = Family::kWell2D;
  rp.xi0 = 1.0;
  EXPECT_THROW(tan_delta_well2d(0, rp), UnsupportedRegime);
}

ReducedParams ring(double omega, double alpha, double beta, double xi, double xi0 = 1.0) {
  return reduce_at({Family::kRing2D, omega, alpha, beta, 0.5 * xi0, xi0}, {1.0}, xi);
}

TEST(Ring2D, FreeParticle) {
  for (int m = 0; m < 5; ++m) EXPECT_EQ(tan_delta_ring2d(m, ring(0.0, 1.0, 1.0, 0.1)), 0.0);
}

TEST(Ring2D, LimitValue) {
  // pi / (2 gamma - 2 ln 2), recomputed with mpmath: -13.549346938784...
  const double limit = pi / (2 * kGamma - 2 * std::numbers::ln2);
  EXPECT_NEAR(limit, -13.549346938783970, 1e-12);
  // Corrections are O(xi^2 ln xi).
  for (double xi : {1e-3, 1e-5, 1e-8}) {
    EXPECT_NEAR(tan_delta_ring2d(0, ring(-1.0, 1.0, 1.0, xi)) / limit, 1.0, 50 * xi * xi * std::log(1 / xi))
        << xi;
  }
  // General xi0: pi / (2 gamma + 2 ln(xi0/2)).
  const double xi0 = 3.7;
  EXPECT_NEAR(tan_delta_ring2d(0, ring(-1.0, 1.0, 1.0, 1e-7, xi0)) /
                  (pi / (2 * kGamma + 2 * std::log(xi0 / 2))),
              1.0, 1e-9);
}

TEST(Ring2D, LogRewriteMatchesDirectForm) {
  // Below xi = 0.5 the resonant branch uses a rearranged denominator.
  for (double b : {-1.0, -0.7, 0.4}) {
    for (double xi : {0.01, 0.2, 0.49}) {
      const auto rp = ring(b, 1.0, 1.0, xi, 2.0);
      const double jm = special::bessel_j(0, xi);
      const double direct = b * pi * jm * jm /
                            (-2.0 * rp.log_factor() + b * pi * jm * special::bessel_n(0, xi));
      EXPECT_NEAR(tan_delta_ring2d(0, rp), direct, 1e-12 * std::abs(direct)) << b << " " << xi;
    }
  }
}

TEST(Ring2D, RejectsXiAtOrBeyondXi0) {
  ReducedParams rp;
  rp.family = Family::kRing2D;
  rp.xi = 1.0;
  rp.xi0 = 1.0;
  rp.b = -1.0;
  EXPECT_THROW(tan_delta_ring2d(0, rp), DomainError);
}

TEST(Ring2D, BetaNotOneIsTrivial) {
  const double t = tan_delta_ring2d(0, ring(-1.0, 1.0, 2.0, 1e-8));
  EXPECT_LT(std::abs(t), 0.1);
}

ReducedParams well2d(double omega, double alpha, double beta, double xi, double xi0 = 1.0) {
  return reduce_at({Family::kWell2D, omega, alpha, beta, 0.5 * xi0, xi0}, {1.0}, xi);
}

TEST(Well2D, FreeLimitVanishes) {
  for (int m = 0; m < 5; ++m) {
    EXPECT_LE(std::abs(tan_delta_well2d(m, well2d(-1e-300, 1.0, 1.0, 0.2))), 1e-15);
  }
}

TEST(Well2D, HigherWavesVanish) {
  EXPECT_LT(std::abs(tan_delta_well2d(1, well2d(-1.0, 1.0, 1.0, 1e-2))), 1e-3);
}

// The s-wave tends to a finite nonzero constant, pi / (2 gamma + 2 ln(xi0/2) - 1/2)
// (small-argument expansion of the well formula, checked with mpmath at
// 60 digits). It is not the ring constant: the interior curvature of the
// well contributes the extra -1/2.
TEST(Well2D, SWaveLimitIsFiniteAndShiftedFromRing) {
  const double well_limit = pi / (2 * kGamma - 2 * std::numbers::ln2 - 0.5);
  const double ring_limit = pi / (2 * kGamma - 2 * std::numbers::ln2);
  const PotentialSpec spec{Family::kWell2D, -1.0, 1.0, 1.0, 0.5, 1.0};
  const double deep = tan_delta0_2d_log(spec, {1.0}, -1e7).value();
  EXPECT_NEAR(deep / well_limit, 1.0, 1e-5);
  EXPECT_GT(std::abs(deep - ring_limit), 5.0);
  // mpmath, 60 digits, xi = 1e-10000: -4.2925858...
  EXPECT_NEAR(tan_delta0_2d_log(spec, {1.0}, -10000 * std::numbers::ln10).value(), -4.2925858,
              5e-7);
}

TEST(TwoDLogEvaluator, MatchesDirectPath) {
  const std::vector<PotentialSpec> specs{
      {Family::kRing2D, -1.0, 1.0, 1.0, 0.5, 1.0},  {Family::kRing2D, -1.001, 1.0, 1.0, 0.5, 1.0},
      {Family::kRing2D, -1.0, 1.5, 2.0, 0.5, 1.0},  {Family::kRing2D, 0.7, 0.5, -1.0, 0.5, 1.0},
      {Family::kWell2D, -1.0, 1.0, 1.0, 0.5, 1.0},  {Family::kWell2D, -0.5, 0.5, 0.5, 0.5, 1.0},
      {Family::kWell2D, -2.0, 1.0, -1.0, 0.5, 3.0},
  };
  for (const auto& spec : specs) {
    // Leading order in xi^2: agreement to rounding once xi^2 ln(1/xi) < 1e-14.
    for (double xi : {1e-8, 1e-12, 1e-20, 1e-35}) {
      const double direct = tan_delta(0, reduce_at(spec, {1.0}, xi));
      const double via_log = tan_delta0_2d_log(spec, {1.0}, std::log(xi)).value();
      EXPECT_NEAR(via_log, direct, 1e-8 * std::abs(direct))
          << to_string(spec.family) << " omega=" << spec.omega << " xi=" << xi;
    }
  }
  EXPECT_THROW(tan_delta0_2d_log({Family::kShell3D, -1.0}, {1.0}, -5.0), DomainError);
  EXPECT_THROW(tan_delta0_2d_log(specs[0], {1.0}, 0.1), DomainError);
}

ReducedParams one_d(Family f, double omega, double alpha, double xi) {
  return reduce_at({f, omega, alpha}, {1.0}, xi);
}

TEST(OneD, OrdinaryDeltaLimit) {
  for (double b : {-2.0, 0.5, 3.0}) {
    const ParityPair p = tan_delta_1d(one_d(Family::kDoubleDelta1D, b, 0.0, 1e-8));
    EXPECT_NEAR(p.even, -b, 1e-7 * std::abs(b));
    EXPECT_NEAR(p.odd, 0.0, 1e-7);
  }
}

TEST(OneD, ResonantDoubleDeltaDivergesInBothChannels) {
  for (double xi : {1e-3, 1e-5}) {
    const ParityPair p = tan_delta_1d(one_d(Family::kDoubleDelta1D, -1.0, 1.0, xi));
    EXPECT_NEAR(xi * p.even, 0.5, 1e-3);
    EXPECT_NEAR(xi * p.odd, 1.5, 1e-3);
  }
}

TEST(OneD, DoubleDeltaClosedForm) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> lx(-4.0, 0.5), al(-1.0, 2.0), bb(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double xi = std::pow(10.0, lx(rng)), alpha = al(rng), b = bb(rng);
    const ParityPair p = tan_delta_1d(one_d(Family::kDoubleDelta1D, b, alpha, xi));
    const Real X(xi), B(b), A(pow(X, Real(alpha)));
    const double even = static_cast<double>(B * cos(X) * cos(X) / (-A + B * sin(X) * cos(X)));
    const double odd = static_cast<double>(B * sin(X) * sin(X) / (-A - B * sin(X) * cos(X)));
    EXPECT_NEAR(std::atan(p.even), std::atan(even), 1e-12);
    EXPECT_NEAR(std::atan(p.odd), std::atan(odd), 1e-12);
  }
}

TEST(OneD, WellOddHalfBoundDiverges) {
  const double omega = -pi * pi / 4;
  const double t3 = tan_delta_1d(one_d(Family::kWell1D, omega, 1.0, 1e-3)).odd;
  const double t4 = tan_delta_1d(one_d(Family::kWell1D, omega, 1.0, 1e-4)).odd;
  EXPECT_GT(std::abs(t3), 1e2);
  EXPECT_NEAR(t4 / t3, 10.0, 1e-2);
}

TEST(OneD, WellClosedForm) {
  std::mt19937_64 rng(36);
  std::uniform_real_distribution<double> lx(-4.0, 0.5), al(-1.0, 2.0), om(-30.0, -0.01);
  for (int i = 0; i < 200; ++i) {
    const double xi = std::pow(10.0, lx(rng)), alpha = al(rng), omega = om(rng);
    const auto rp = one_d(Family::kWell1D, omega, alpha, xi);
    const ParityPair p = tan_delta_1d(rp);
    const Real X(xi), E(rp.eta->magnitude);
    const Real even = (E * tan(E) - X * tan(X)) / (X + E * tan(X) * tan(E));
    const Real odd = (X * tan(E) - E * tan(X)) / (E + X * tan(X) * tan(E));
    EXPECT_NEAR(std::atan(p.even), static_cast<double>(atan(even)), 1e-10);
    EXPECT_NEAR(std::atan(p.odd), static_cast<double>(atan(odd)), 1e-10);
  }
}

TEST(Dispatch, IndexRouting) {
  const auto rp = one_d(Family::kWell1D, -2.0, 1.0, 0.3);
  EXPECT_EQ(tan_delta(0, rp), tan_delta_1d(rp).even);
  EXPECT_EQ(tan_delta(1, rp), tan_delta_1d(rp).odd);
  EXPECT_THROW(tan_delta(2, rp), DomainError);
  EXPECT_THROW(tan_delta_well3d(special::kMaxOrder, well3d(-1.0, 1.0, 0.3)), DomainError);
}

TEST(DeltaModPi, Convention) {
  EXPECT_DOUBLE_EQ(delta_mod_pi(kInf), pi / 2);
  EXPECT_DOUBLE_EQ(delta_mod_pi(-kInf), pi / 2);
  EXPECT_DOUBLE_EQ(delta_mod_pi(1.0), pi / 4);
  EXPECT_DOUBLE_EQ(delta_mod_pi(-1.0), -pi / 4);
  EXPECT_EQ(delta_mod_pi(0.0), 0.0);
}

TEST(BuildTable, FreeShell) {
  const auto t = build_table({Family::kShell3D, 0.0}, {1.0});
  EXPECT_EQ(t.truncation_index, 1);
  EXPECT_EQ(t.truncation, Truncation::kBelowThreshold);
  ASSERT_EQ(t.entries.size(), 2u);
  for (const auto& e : t.entries) EXPECT_EQ(e.tan_delta, 0.0);
}

TEST(BuildTable, ResonantShell) {
  const auto t = build_table({Family::kShell3D, -1.0, 1.0, 0.0, 1e-3}, {1.0});
  EXPECT_NEAR(t.entries[0].tan_delta, 1500.0, 1e-2);
  ASSERT_GE(t.entries.size(), 2u);
  for (std::size_t i = 1; i < t.entries.size(); ++i) {
    EXPECT_LT(std::abs(t.entries[i].tan_delta), 1e-5);
  }
  EXPECT_EQ(t.truncation, Truncation::kBelowThreshold);
}

TEST(BuildTable, Invariants) {
  const std::vector<PotentialSpec> specs{
      {Family::kShell3D, 2.0, 1.0, 0.0, 3.0}, {Family::kWell3D, -5.0, 1.0, 0.0, 2.0},
      {Family::kRing2D, -0.5, 1.0, 1.0, 0.8, 4.0}, {Family::kWell2D, -3.0, 0.5, 1.0, 1.1, 5.0},
  };
  for (const auto& spec : specs) {
    const auto t = build_table(spec, {1.7});
    ASSERT_EQ(static_cast<int>(t.entries.size()), t.truncation_index + 1);
    for (int i = 0; i <= t.truncation_index; ++i) {
      const auto& e = t.entries[i];
      EXPECT_EQ(e.index, i);
      EXPECT_EQ(e.delta, delta_mod_pi(e.tan_delta));
      EXPECT_GT(e.delta, -pi / 2);
      EXPECT_LE(e.delta, pi / 2);
    }
    EXPECT_EQ(t, build_table(spec, {1.7}));
  }
}

TEST(BuildTable, OneDHasTwoEntries) {
  for (Family f : {Family::kDoubleDelta1D, Family::kWell1D}) {
    const auto t = build_table({f, -1.0, 1.0, 0.0, 0.2}, {1.0});
    ASSERT_EQ(t.entries.size(), 2u);
    EXPECT_EQ(t.truncation_index, 1);
  }
}

TEST(BuildTable, CapAndHint) {
  const auto big = build_table({Family::kShell3D, 1.0, 1.0, 0.0, 300.0}, {1.0});
  EXPECT_EQ(big.truncation, Truncation::kCap);
  EXPECT_EQ(big.truncation_index, special::kMaxOrder);
  const auto well = build_table({Family::kWell3D, -1.0, 1.0, 0.0, 300.0}, {1.0});
  EXPECT_EQ(well.truncation_index, special::kMaxOrder - 1);
  const auto hinted = build_table({Family::kShell3D, 1.0, 1.0, 0.0, 300.0}, {1.0}, 5);
  EXPECT_EQ(hinted.truncation_index, 5);
  EXPECT_EQ(hinted.truncation, Truncation::kCap);
}

TEST(TableFromDeltas, SaturatesToInfinity) {
  const std::vector<double> deltas{pi / 2, 0.3, 0.0};
  const auto t = table_from_deltas(Family::kShell3D, 2.0, deltas);
  EXPECT_TRUE(std::isinf(t.entries[0].tan_delta));
  EXPECT_DOUBLE_EQ(t.entries[0].delta, pi / 2);
  EXPECT_DOUBLE_EQ(t.entries[1].tan_delta, std::tan(0.3));
  EXPECT_EQ(t.truncation_index, 2);
  EXPECT_THROW(table_from_deltas(Family::kWell1D, 1.0, deltas), DomainError);
}

}  // namespace
