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
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "qgtsim/model.hpp"
#include "qgtsim/sweep.hpp"

namespace qgtsim {

struct SuiteResult {
  std::string name;
  bool passed = false;
  /// Worst observed deviation (for the slope suite, the worst |slope - 1|).
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
  /// Points that missed the tolerance or failed outright.
  std::vector<std::string> degraded;
};

struct ValidationReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// Uniform random QWZ points with m in [0.25, 3.75] and |d| >= min_gap.
std::vector<ModelPoint> sample_gapped_points(std::size_t count, std::uint64_t seed,
                                             double min_gap);

/// Log-log least-squares slope of err against delta.
double convergence_slope(const std::vector<double>& deltas, const std::vector<double>& errors);

/// Runs the oracle-equivalence suites (projector method against the
/// eigenvector oracle, finite-difference order, imaginary-time and
/// variational preparation against exact projectors, non-Abelian extraction
/// against its oracle). With config.exact false a shot-mode suite also
/// checks the configured method at config.shots.
ValidationReport run_validation(const RunConfig& config);

/// One "PASS|FAIL name residual=... tol=... detail" line per suite.
void print_report(std::ostream& os, const ValidationReport& report);

}  // namespace qgtsim
