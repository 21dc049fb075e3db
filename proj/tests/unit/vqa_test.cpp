// Copyright 2026 The qgtsim Authors
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

#include "qgtsim/vqa.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"

namespace qgtsim {
namespace {

constexpr double kPi = std::numbers::pi;

double bloch_energy(const PQCParams& p, const BlochVector& d) {
  return d.x * std::sin(p.theta) * std::cos(p.phi) + d.y * std::sin(p.theta) * std::sin(p.phi) +
         d.z * std::cos(p.theta);
}

TEST(Energy, Examples) {
  const BlochVector d{0.3, -0.4, 1.2};
  EXPECT_NEAR(energy_expectation({0, 0, 0}, d), 1.2, 1e-14);
  EXPECT_NEAR(energy_expectation({kPi, 0, 0}, d), -1.2, 1e-14);
  EXPECT_NEAR(energy_expectation({kPi / 2, 0, 0}, d), 0.3, 1e-14);
  EXPECT_NEAR(energy_expectation({kPi / 2, kPi / 2, 0}, d), -0.4, 1e-14);
}

TEST(Energy, MatchesBlochFormulaAndIgnoresLambda) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const BlochVector d{u(rng), u(rng), u(rng)};
    const PQCParams p{u(rng), u(rng), u(rng)};
    const double e = energy_expectation(p, d);
    EXPECT_NEAR(e, bloch_energy(p, d), 1e-12);
    EXPECT_NEAR(energy_expectation({p.theta, p.phi, p.lambda + 1.7}, d), e, 1e-12);
    // Statevector route.
    const Statevector psi = run_statevector(pqc_circuit(p), zero_state(1));
    EXPECT_NEAR(psi.dot(build_hamiltonian(d) * psi).real(), e, 1e-12);
  }
}

TEST(Energy, ShotEstimateWithinNoise) {
  const BlochVector d{0.5, 0.5, -0.7};
  const PQCParams p{1.1, 0.4, 0.0};
  const double e = energy_expectation(p, d, ExecutionMode::sampled(100000, 5));
  EXPECT_NEAR(e, bloch_energy(p, d), 6.0 * 1.0 / std::sqrt(1e5));
}

TEST(Canonicalize, RangeAndState) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const PQCParams p{u(rng), u(rng), 0.0};
    const PQCParams c = canonicalize(p);
    EXPECT_GE(c.theta, 0.0);
    EXPECT_LE(c.theta, kPi);
    EXPECT_GE(c.phi, 0.0);
    EXPECT_LT(c.phi, 2 * kPi);
    const BlochVector d{0.2, 0.9, -0.4};
    EXPECT_NEAR(bloch_energy(c, d), bloch_energy(p, d), 1e-12);
  }
}

TEST(Optimize, ReachesGroundForRandomFields) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const BlochVector d{u(rng), u(rng), u(rng)};
    if (d.norm() < 0.05) continue;
    const OptimizationResult r = optimize_ground(d);
    EXPECT_LE(r.energy + d.norm(), 1e-8);
    // The ground Bloch direction is -d/|d|.
    const double nz = std::cos(r.params.theta);
    EXPECT_NEAR(nz, -d.z / d.norm(), 1e-3);
  }
}

TEST(Optimize, PolarExamples) {
  const OptimizationResult down = optimize_ground({0, 0, 1.0});
  EXPECT_NEAR(down.params.theta, kPi, 1e-4);
  const OptimizationResult up = optimize_ground({0, 0, -1.0});
  EXPECT_NEAR(up.params.theta, 0.0, 1e-4);
}

TEST(Optimize, ParameterShiftAlsoConverges) {
  OptimizerConfig cfg;
  cfg.method = OptimizerMethod::kParameterShift;
  cfg.tolerance = 1e-7;
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const BlochVector d{u(rng), u(rng), u(rng)};
    if (d.norm() < 0.1) continue;
    EXPECT_LE(optimize_ground(d, cfg).energy + d.norm(), 1e-7);
  }
}

TEST(Optimize, DeterministicForSeed) {
  const BlochVector d{0.4, -1.1, 0.3};
  OptimizerConfig cfg;
  cfg.seed = 9;
  const OptimizationResult a = optimize_ground(d, cfg);
  const OptimizationResult b = optimize_ground(d, cfg);
  EXPECT_EQ(a.params.theta, b.params.theta);
  EXPECT_EQ(a.params.phi, b.params.phi);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Optimize, GaplessAndBadConfigRejected) {
  EXPECT_THROW(optimize_ground({0, 0, 0}), GaplessPointError);
  OptimizerConfig cfg;
  cfg.max_iters = 0;
  EXPECT_THROW(optimize_ground({1, 0, 0}, cfg), ConfigError);
}

TEST(Optimize, UnreachableToleranceThrowsWithBest) {
  OptimizerConfig cfg;
  cfg.max_iters = 3;
  cfg.restarts = 1;
  cfg.tolerance = 1e-300;
  try {
    optimize_ground({0.3, 0.2, 0.9}, cfg);
    FAIL() << "expected OptimizationError";
  } catch (const OptimizationError& e) {
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(Prepare, ExactProjectorAtQuarterPoint) {
  const ModelPoint p{kPi / 2, kPi / 2, 1.0};
  const PreparedProjector pp = prepare_ground_projector_vqa(p, ExecutionMode::exact_mode());
  const oracle::Mat want = oracle::ground_projector(oracle::qwz_d(p.kx, p.ky, p.m));
  EXPECT_LT(max_abs(pp.projector - want), 1e-6);
  EXPECT_DOUBLE_EQ(pp.success_fraction, 1.0);
}

TEST(Prepare, ShotProjectorClose) {
  const ModelPoint p{kPi / 2, kPi / 2, 1.0};
  const PreparedProjector pp =
      prepare_ground_projector_vqa(p, ExecutionMode::sampled(100000, 11));
  const oracle::Mat want = oracle::ground_projector(oracle::qwz_d(p.kx, p.ky, p.m));
  EXPECT_LT(trace_distance(pp.projector, want), 0.02);
}

}  // namespace
}  // namespace qgtsim
