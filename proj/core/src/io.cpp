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

#include "qgtsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qgtsim/errors.hpp"

namespace qgtsim {
namespace {

using nlohmann::json;

json to_json(const RunConfig& c) {
  return json{{"method", method_name(c.method)},
              {"m", c.m},
              {"grid_n", c.grid_n},
              {"delta", c.delta},
              {"tau", c.tau},
              {"shots", c.shots},
              {"exact", c.exact},
              {"depolarizing_p", c.depolarizing_p},
              {"readout_q", c.readout_q},
              {"mitigate", c.mitigate},
              {"purify", c.purify},
              {"robust_eps", c.robust_eps},
              {"base_seed", c.base_seed},
              {"workers", c.workers},
              {"scheme", c.scheme == DifferenceScheme::kForward ? "forward" : "central"}};
}

template <typename T>
void read_field(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

double parse_double(const std::string& s) {
  if (s == "nan" || s == "NaN" || s.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw ConfigError("csv: bad number '" + s + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<PointRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << format_double(r.kx) << ',' << format_double(r.ky) << ',' << format_double(r.qgt.g_xx)
       << ',' << format_double(r.qgt.g_xy) << ',' << format_double(r.qgt.g_yy) << ','
       << format_double(r.qgt.f_xy) << ',' << format_double(r.success_fraction) << ',';
    for (std::size_t i = 0; i < r.qgt.flags.size(); ++i) {
      if (i) os << ';';
      os << r.qgt.flags[i];
    }
    os << '\n';
  }
}

std::vector<PointRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw ConfigError("csv: missing or unexpected header");
  }
  std::vector<PointRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 8) throw ConfigError("csv: expected 8 columns in '" + line + "'");
    PointRecord r;
    r.index = static_cast<int>(out.size());
    r.kx = parse_double(cells[0]);
    r.ky = parse_double(cells[1]);
    r.qgt.g_xx = parse_double(cells[2]);
    r.qgt.g_xy = parse_double(cells[3]);
    r.qgt.g_yy = parse_double(cells[4]);
    r.qgt.f_xy = parse_double(cells[5]);
    r.success_fraction = parse_double(cells[6]);
    std::stringstream fs(cells[7]);
    std::string flag;
    while (std::getline(fs, flag, ';')) {
      if (!flag.empty()) r.qgt.flags.push_back(flag);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string config_json(const RunConfig& config) { return to_json(config).dump(2); }

std::string manifest_json(const SweepResult& result) {
  json seeds = json::array();
  for (const auto& r : result.records) seeds.push_back(r.seed);
  json j{{"tool", result.manifest.tool},
         {"version", result.manifest.version},
         {"wall_seconds", result.manifest.wall_seconds},
         {"workers", result.manifest.workers},
         {"points", result.records.size()},
         {"config", to_json(result.config)},
         {"point_seeds", seeds}};
  return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (j.contains("config")) j = j.at("config");
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  RunConfig c;
  try {
    if (j.contains("method")) c.method = parse_method(j.at("method").get<std::string>());
    read_field(j, "m", c.m);
    read_field(j, "grid_n", c.grid_n);
    read_field(j, "delta", c.delta);
    read_field(j, "tau", c.tau);
    read_field(j, "shots", c.shots);
    read_field(j, "exact", c.exact);
    read_field(j, "depolarizing_p", c.depolarizing_p);
    read_field(j, "readout_q", c.readout_q);
    read_field(j, "mitigate", c.mitigate);
    read_field(j, "purify", c.purify);
    read_field(j, "robust_eps", c.robust_eps);
    read_field(j, "base_seed", c.base_seed);
    read_field(j, "workers", c.workers);
    if (j.contains("scheme")) {
      const auto s = j.at("scheme").get<std::string>();
      if (s == "forward") {
        c.scheme = DifferenceScheme::kForward;
      } else if (s == "central") {
        c.scheme = DifferenceScheme::kCentral;
      } else {
        throw ConfigError("config: unknown scheme '" + s + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw ConfigError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace qgtsim
