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

#pragma once

#include <cstdint>

#include "qgtsim/circuit.hpp"
#include "qgtsim/errors.hpp"
#include "qgtsim/model.hpp"
#include "qgtsim/tomography.hpp"

namespace qgtsim {

/// Angles of the single U3 layer acting on |0>. lambda only sets a global
/// phase of the prepared state.
struct PQCParams {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

enum class OptimizerMethod { kSimplex, kParameterShift };

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::kSimplex;
  int max_iters = 2000;
  /// Accepted distance of the final energy above -|d| in exact mode.
  double tolerance = 1e-8;
  int restarts = 4;
  std::uint64_t seed = 0;
  /// Polish the exact optimum against the sampled energy in shot mode.
  bool refine_with_shots = false;

  void validate() const;
};

struct OptimizationResult {
  PQCParams params;
  double energy = 0.0;
  int iterations = 0;
};

class OptimizationError : public Error {
 public:
  OptimizationError(const std::string& what, PQCParams best, double residual)
      : Error(what), best_(best), residual_(residual) {}
  const PQCParams& best() const { return best_; }
  double residual() const { return residual_; }

 private:
  PQCParams best_;
  double residual_;
};

/// Circuit with one U3 on qubit 0, no measurement.
Circuit pqc_circuit(const PQCParams& params);

/// <H> on U3|0>. Exact mode uses the closed form
/// d_z cos(theta) + sin(theta) (d_x cos(phi) + d_y sin(phi)); shot mode
/// measures the three Pauli circuits.
double energy_expectation(const PQCParams& params, const BlochVector& d,
                          const ExecutionMode& mode = ExecutionMode::exact_mode());

/// Maps angles to theta in [0, pi], phi in [0, 2 pi) without changing the state.
PQCParams canonicalize(PQCParams p);

/// Minimizes the energy over (theta, phi) with lambda = 0 from cfg.restarts
/// seeded starting points. The search itself always runs on the exact energy;
/// with cfg.refine_with_shots and a shot mode the optimum is then polished on
/// sampled energies. Throws OptimizationError when the exact energy stays
/// above -|d| + cfg.tolerance.
OptimizationResult optimize_ground(const BlochVector& d, const OptimizerConfig& cfg = {},
                                   const ExecutionMode& mode = ExecutionMode::exact_mode());

/// Optimizes the ansatz at p, then measures sigma_x, sigma_y, sigma_z on
/// three circuits and reconstructs P_g.
PreparedProjector prepare_ground_projector_vqa(const ModelPoint& p, const ExecutionMode& mode,
                                               const OptimizerConfig& cfg = {},
                                               bool purify = true);

}  // namespace qgtsim
