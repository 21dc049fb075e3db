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

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace qgtsim {
namespace {

using Point2 = std::array<double, 2>;
using Objective = std::function<double(const Point2&)>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Minimum {
  Point2 x{};
  double f = 0.0;
  int iterations = 0;
};

Minimum nelder_mead(const Objective& f, Point2 start, double step, int max_iters,
                    double ftol, double xtol) {
  std::array<Point2, 3> x = {start, start, start};
  x[1][0] += step;
  x[2][1] += step;
  std::array<double, 3> fx = {f(x[0]), f(x[1]), f(x[2])};

  auto combine = [](const Point2& a, const Point2& b, double t) {
    return Point2{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };

  int it = 0;
  for (; it < max_iters; ++it) {
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const int best = order[0], mid = order[1], worst = order[2];

    double spread = std::abs(fx[worst] - fx[best]);
    double size = 0.0;
    for (int i : {mid, worst}) {
      size = std::max(size, std::hypot(x[i][0] - x[best][0], x[i][1] - x[best][1]));
    }
    if (spread <= ftol && size <= xtol) break;

    const Point2 centroid = combine(x[best], x[mid], 0.5);
    const Point2 xr = combine(centroid, x[worst], -1.0);
    const double fr = f(xr);
    if (fr < fx[best]) {
      const Point2 xe = combine(centroid, x[worst], -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        x[worst] = xe;
        fx[worst] = fe;
      } else {
        x[worst] = xr;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[mid]) {
      x[worst] = xr;
      fx[worst] = fr;
      continue;
    }
    const bool outside = fr < fx[worst];
    const Point2 xc = outside ? combine(centroid, xr, 0.5) : combine(centroid, x[worst], 0.5);
    const double fc = f(xc);
    if (fc < std::min(fr, fx[worst])) {
      x[worst] = xc;
      fx[worst] = fc;
      continue;
    }
    for (int i : {mid, worst}) {
      x[i] = combine(x[best], x[i], 0.5);
      fx[i] = f(x[i]);
    }
  }
  const auto b = std::min_element(fx.begin(), fx.end()) - fx.begin();
  return {x[b], fx[b], it};
}

Minimum parameter_shift_descent(const Objective& f, Point2 start, int max_iters, double gtol) {
  constexpr double kShift = 0.5 * std::numbers::pi;
  Point2 x = start;
  double fx = f(x);
  int it = 0;
  for (; it < max_iters; ++it) {
    Point2 g{};
    for (int i = 0; i < 2; ++i) {
      Point2 plus = x, minus = x;
      plus[i] += kShift;
      minus[i] -= kShift;
      g[i] = 0.5 * (f(plus) - f(minus));
    }
    const double gnorm = std::hypot(g[0], g[1]);
    // The energy is a sinusoid of amplitude sqrt(E^2 + |g|^2) along each
    // angle, so its inverse is a safe step size.
    const double scale = std::sqrt(fx * fx + gnorm * gnorm);
    if (scale == 0.0 || gnorm <= gtol * scale) break;
    x = {x[0] - g[0] / scale, x[1] - g[1] / scale};
    fx = f(x);
  }
  return {x, fx, it};
}

}  // namespace

void OptimizerConfig::validate() const {
  if (max_iters < 1) throw ConfigError("optimizer: max_iters must be at least 1");
  if (!(tolerance > 0.0)) throw ConfigError("optimizer: tolerance must be positive");
  if (restarts < 1) throw ConfigError("optimizer: restarts must be at least 1");
}

Circuit pqc_circuit(const PQCParams& params) {
  Circuit c;
  c.num_qubits = 1;
  c.gates.push_back(Gate::u3(0, params.theta, params.phi, params.lambda));
  return c;
}

double energy_expectation(const PQCParams& params, const BlochVector& d,
                          const ExecutionMode& mode) {
  if (mode.exact) {
    return d.z * std::cos(params.theta) +
           std::sin(params.theta) * (d.x * std::cos(params.phi) + d.y * std::sin(params.phi));
  }
  const PauliMeasurement m =
      measure_pauli_expectations(pqc_circuit(params), zero_state(1), 0, -1, mode);
  return d.x * m.expectations.sx + d.y * m.expectations.sy + d.z * m.expectations.sz;
}

PQCParams canonicalize(PQCParams p) {
  double theta = std::fmod(p.theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  double phi = p.phi;
  if (theta > std::numbers::pi) {
    theta = kTwoPi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return {theta, phi, p.lambda};
}

OptimizationResult optimize_ground(const BlochVector& d, const OptimizerConfig& cfg,
                                   const ExecutionMode& mode) {
  cfg.validate();
  if (d.gapless()) throw GaplessPointError("optimize_ground: |d| vanishes");

  const Objective exact = [&](const Point2& x) {
    return energy_expectation({x[0], x[1], 0.0}, d, ExecutionMode::exact_mode());
  };

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> theta0(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> phi0(0.0, kTwoPi);

  Minimum best;
  best.f = std::numeric_limits<double>::infinity();
  int iterations = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    const Point2 start{theta0(rng), phi0(rng)};
    const Minimum m = cfg.method == OptimizerMethod::kSimplex
                          ? nelder_mead(exact, start, 0.5, cfg.max_iters, 1e-15, 1e-10)
                          : parameter_shift_descent(exact, start, cfg.max_iters, 1e-10);
    iterations += m.iterations;
    if (m.f < best.f) best = m;
  }

  PQCParams params = canonicalize({best.x[0], best.x[1], 0.0});
  const double residual = best.f + d.norm();
  if (residual > cfg.tolerance) {
    std::ostringstream os;
    os.precision(6);
    os << "optimize_ground: energy stays " << residual << " above -|d| after " << cfg.restarts
       << " restarts";
    throw OptimizationError(os.str(), params, residual);
  }

  OptimizationResult out{params, best.f, iterations};
  if (!mode.exact && cfg.refine_with_shots) {
    std::uint64_t evaluation = 0;
    const Objective sampled = [&](const Point2& x) {
      ExecutionMode m = mode;
      m.seed = mix_seed(mode.seed, ++evaluation);
      return energy_expectation({x[0], x[1], 0.0}, d, m);
    };
    const Minimum polished =
        nelder_mead(sampled, {params.theta, params.phi}, 0.05, 40, 0.0, 1e-4);
    out.params = canonicalize({polished.x[0], polished.x[1], 0.0});
    out.energy = polished.f;
    out.iterations += polished.iterations;
  }
  return out;
}

PreparedProjector prepare_ground_projector_vqa(const ModelPoint& p, const ExecutionMode& mode,
                                               const OptimizerConfig& cfg, bool purify) {
  const BlochVector d = bloch_vector(p);
  if (d.gapless()) throw GaplessPointError("prepare_ground_projector_vqa: gapless point");
  const OptimizationResult opt = optimize_ground(d, cfg, mode);
  const PauliMeasurement m =
      measure_pauli_expectations(pqc_circuit(opt.params), zero_state(1), 0, -1, mode);
  PreparedProjector out;
  out.expectations = m.expectations;
  out.success_fraction = m.success_fraction;
  out.projector = reconstruct_projector(m.expectations, purify);
  return out;
}

}  // namespace qgtsim
