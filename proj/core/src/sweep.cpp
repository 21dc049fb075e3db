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

#include "qgtsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "qgtsim/errors.hpp"
#include "qgtsim/ite.hpp"
#include "qgtsim/tomography.hpp"
#include "qgtsim/vqa.hpp"

#ifndef QGTSIM_VERSION
#define QGTSIM_VERSION "0.0.0"
#endif

namespace qgtsim {
namespace {

void add_flag(std::vector<std::string>& flags, const std::string& f) {
  if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
}

PreparedProjector prepare(const RunConfig& cfg, const ModelPoint& q, std::uint64_t seed) {
  switch (cfg.method) {
    case Method::kExact: {
      PreparedProjector out;
      out.projector = exact_ground_projector(q);
      return out;
    }
    case Method::kVqa: {
      OptimizerConfig opt;
      opt.seed = seed;
      return prepare_ground_projector_vqa(q, cfg.mode(seed), opt, cfg.purify);
    }
    case Method::kIte: {
      IteConfig ite;
      ite.tau = cfg.tau;
      try {
        return prepare_ground_projector_ite(q, cfg.mode(seed), ite, cfg.purify);
      } catch (const OverlapGuardError&) {
        ite.initial = InitialState::kPlus;
        PreparedProjector out = prepare_ground_projector_ite(q, cfg.mode(seed), ite, cfg.purify);
        out.flags.push_back("ite_fallback_plus");
        return out;
      }
    }
  }
  throw ConfigError("unknown method");
}

// Too few ancilla shots survive: rerun once with ten times the shots.
PreparedProjector prepare_with_retry(const RunConfig& cfg, const ModelPoint& q,
                                     std::uint64_t seed) {
  try {
    return prepare(cfg, q, seed);
  } catch (const PostSelectionError&) {
    if (cfg.exact) throw;
    RunConfig more = cfg;
    more.shots = cfg.shots * 10;
    PreparedProjector out = prepare(more, q, mix_seed(seed, 0x7e7));
    out.flags.push_back("post_selection_retry");
    return out;
  }
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kVqa:
      return "vqa";
    case Method::kIte:
      return "ite";
    case Method::kExact:
      return "exact";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "vqa") return Method::kVqa;
  if (s == "ite") return Method::kIte;
  if (s == "exact") return Method::kExact;
  throw ConfigError("unknown method '" + s + "' (expected vqa, ite or exact)");
}

void RunConfig::validate() const {
  grid().validate();
  if (shots < 1) throw ConfigError("shots must be at least 1");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("tau must be positive");
  NoiseConfig{depolarizing_p, readout_q}.validate();
  if (mitigate && !(readout_q < 0.5)) throw ConfigError("mitigation needs readout_q < 0.5");
  if (!(robust_eps >= 0.0)) throw ConfigError("robust_eps must be nonnegative");
  if (workers < 0) throw ConfigError("workers must be nonnegative");
}

ExecutionMode RunConfig::mode(std::uint64_t seed) const {
  if (exact) return ExecutionMode::exact_mode();
  return ExecutionMode::sampled(shots, seed, {depolarizing_p, readout_q}, mitigate);
}

std::uint64_t point_seed(std::uint64_t base_seed, int index) {
  return mix_seed(base_seed, static_cast<std::uint64_t>(index));
}

const char* library_version() { return QGTSIM_VERSION; }

PointRecord run_point(const RunConfig& config, int index) {
  const ModelPoint p = config.grid().point(index);
  PointRecord rec = run_point_at(config, p.kx, p.ky, point_seed(config.base_seed, index));
  rec.index = index;
  return rec;
}

PointRecord run_point_at(const RunConfig& config, double kx, double ky, std::uint64_t seed) {
  const ModelPoint p{kx, ky, config.m};
  PointRecord rec;
  rec.kx = kx;
  rec.ky = ky;
  rec.seed = seed;

  try {
    const double h = config.delta;
    auto at = [&](int slot, double dx, double dy) {
      return prepare_with_retry(config, {p.kx + dx, p.ky + dy, p.m}, mix_seed(rec.seed, slot));
    };
    const PreparedProjector centre = at(0, 0.0, 0.0);
    std::vector<PreparedProjector> stencil;
    stencil.push_back(at(1, h, 0.0));
    stencil.push_back(at(2, 0.0, h));
    ComplexMatrix dpx, dpy;
    if (config.scheme == DifferenceScheme::kForward) {
      dpx = projector_derivative(centre.projector, stencil[0].projector, h);
      dpy = projector_derivative(centre.projector, stencil[1].projector, h);
    } else {
      stencil.push_back(at(3, -h, 0.0));
      stencil.push_back(at(4, 0.0, -h));
      dpx = projector_derivative_central(stencil[2].projector, stencil[0].projector, h);
      dpy = projector_derivative_central(stencil[3].projector, stencil[1].projector, h);
    }
    const ComplexMatrix pe = ComplexMatrix::Identity(2, 2) - centre.projector;
    rec.qgt = extract_qgt(centre.projector, pe, dpx, dpy, config.robust_eps);
    rec.success_fraction = centre.success_fraction;
    for (const auto& f : centre.flags) add_flag(rec.qgt.flags, f);
    for (const auto& s : stencil) {
      for (const auto& f : s.flags) add_flag(rec.qgt.flags, f);
    }
  } catch (const Error& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rec.qgt = QGTPoint{nan, nan, nan, nan, nan, {}};
    rec.success_fraction = nan;
    if (dynamic_cast<const GaplessPointError*>(&e)) {
      add_flag(rec.qgt.flags, "gapless");
    } else if (dynamic_cast<const PostSelectionError*>(&e)) {
      add_flag(rec.qgt.flags, "post_selection_failed");
    } else if (dynamic_cast<const OptimizationError*>(&e)) {
      add_flag(rec.qgt.flags, "optimizer_failed");
    } else {
      add_flag(rec.qgt.flags, "error");
    }
  }
  return rec;
}

SweepResult sweep(const RunConfig& config, const std::function<void(int, int)>& progress) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const int total = config.grid().size();

  int workers = config.workers;
  if (workers == 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = std::min(workers, total);

  SweepResult out;
  out.config = config;
  out.records.resize(static_cast<std::size_t>(total));
  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex progress_mutex;
  auto work = [&] {
    for (int i = next++; i < total; i = next++) {
      out.records[static_cast<std::size_t>(i)] = run_point(config, i);
      const int d = ++done;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(d, total);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  out.manifest.version = library_version();
  out.manifest.workers = workers;
  out.manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ChernReport chern_report(const std::vector<PointRecord>& records, int grid_n) {
  GridSpec grid;
  grid.n = grid_n;
  if (records.size() != static_cast<std::size_t>(grid.size())) {
    throw ConfigError("chern: expected " + std::to_string(grid.size()) + " records, got " +
                      std::to_string(records.size()));
  }
  std::vector<double> field(records.size(), std::numeric_limits<double>::quiet_NaN());
  for (const auto& r : records) {
    if (r.index < 0 || r.index >= grid.size()) throw ConfigError("chern: record index out of range");
    field[static_cast<std::size_t>(r.index)] = r.qgt.f_xy;
  }
  ChernReport rep;
  rep.chern = chern_number(field, grid);
  rep.nearest = std::lround(rep.chern);
  rep.residual = std::abs(rep.chern - static_cast<double>(rep.nearest));
  return rep;
}

}  // namespace qgtsim
