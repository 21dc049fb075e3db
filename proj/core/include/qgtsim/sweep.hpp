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
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qgtsim/circuit.hpp"
#include "qgtsim/model.hpp"
#include "qgtsim/qgt.hpp"

namespace qgtsim {

enum class Method { kVqa, kIte, kExact };

const char* method_name(Method m);
/// Parses "vqa", "ite" or "exact"; throws ConfigError otherwise.
Method parse_method(const std::string& s);

struct RunConfig {
  Method method = Method::kVqa;
  double m = 1.0;
  int grid_n = 15;
  double delta = 0.04 * std::numbers::pi;
  double tau = 8.0;
  std::int64_t shots = 100000;
  /// Use exact Born probabilities instead of sampled shots.
  bool exact = false;
  double depolarizing_p = 0.0;
  double readout_q = 0.0;
  bool mitigate = false;
  bool purify = true;
  double robust_eps = 0.05;
  std::uint64_t base_seed = 1;
  /// Worker threads; 0 picks the hardware concurrency.
  int workers = 0;
  DifferenceScheme scheme = DifferenceScheme::kForward;

  GridSpec grid() const { return {grid_n, delta, m}; }
  /// Throws ConfigError on any out-of-range field.
  void validate() const;
  /// Execution mode of one measurement batch seeded with `seed`.
  ExecutionMode mode(std::uint64_t seed) const;

  bool operator==(const RunConfig&) const = default;
};

struct PointRecord {
  int index = 0;
  double kx = 0.0;
  double ky = 0.0;
  QGTPoint qgt;
  /// Ancilla post-selection rate at k (1 for methods without an ancilla).
  double success_fraction = 1.0;
  std::uint64_t seed = 0;
};

struct SweepManifest {
  std::string tool = "qgtsim";
  std::string version;
  double wall_seconds = 0.0;
  int workers = 1;
};

struct SweepResult {
  RunConfig config;
  std::vector<PointRecord> records;
  SweepManifest manifest;
};

/// Library version string.
const char* library_version();

/// base_seed ^ splitmix64(index).
std::uint64_t point_seed(std::uint64_t base_seed, int index);

/// Computes one grid point in isolation. The four projectors (P_g at k,
/// k + delta e_x, k + delta e_y, and P_e = I - P_g) come from the configured
/// method; stencil position j is measured with seed mix_seed(point seed, j).
/// Library errors are caught and turned into flags with NaN values.
PointRecord run_point(const RunConfig& config, int index);

/// Same computation at an arbitrary momentum with an explicit seed.
PointRecord run_point_at(const RunConfig& config, double kx, double ky, std::uint64_t seed);

/// Runs every grid point on a bounded worker pool. Records are stored by
/// point index, so results do not depend on the worker count.
SweepResult sweep(const RunConfig& config,
                  const std::function<void(int done, int total)>& progress = {});

struct ChernReport {
  double chern = 0.0;
  long nearest = 0;
  double residual = 0.0;
};

/// Integrates the curvature field of a complete sweep.
ChernReport chern_report(const std::vector<PointRecord>& records, int grid_n);

}  // namespace qgtsim
