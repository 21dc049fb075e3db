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

#include <iosfwd>
#include <string>
#include <vector>

#include "qgtsim/sweep.hpp"

namespace qgtsim {

/// Exact CSV header of per-point records.
inline constexpr const char* kCsvHeader = "kx,ky,g_xx,g_xy,g_yy,F_xy,success_fraction,flags";

/// Shortest-roundtrip formatting with 17 significant digits.
std::string format_double(double v);

/// One row per record in index order; flags joined by ';'.
void write_csv(std::ostream& os, const std::vector<PointRecord>& records);
/// Parses write_csv output. Records get index = row number. Throws ConfigError.
std::vector<PointRecord> read_csv(std::istream& is);

/// JSON manifest: tool, version, wall time, worker count, full config and
/// per-point seeds.
std::string manifest_json(const SweepResult& result);
/// Recovers the RunConfig from a manifest (or a bare config object).
RunConfig config_from_json(const std::string& text);
std::string config_json(const RunConfig& config);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace qgtsim
