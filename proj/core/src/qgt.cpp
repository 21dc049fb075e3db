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

#include "qgtsim/qgt.hpp"

#include <algorithm>
#include <string>

#include "qgtsim/errors.hpp"

namespace qgtsim {

ComplexMatrix projector_derivative(const ComplexMatrix& p_at_k, const ComplexMatrix& p_at_k_plus,
                                   double delta) {
  if (!(delta > 0.0)) throw ConfigError("projector_derivative: delta must be positive");
  return (p_at_k_plus - p_at_k) / delta;
}

ComplexMatrix projector_derivative_central(const ComplexMatrix& p_minus,
                                           const ComplexMatrix& p_plus, double delta) {
  if (!(delta > 0.0)) throw ConfigError("projector_derivative: delta must be positive");
  return (p_plus - p_minus) / (2.0 * delta);
}

ScalarRecovery recover_scalar(const ComplexMatrix& l, const ComplexMatrix& p, double robust_eps) {
  ScalarRecovery out;
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const double mag = std::abs(p(i, j));
      if (mag == 0.0) continue;
      if (mag < robust_eps) {
        ++out.excluded;
        continue;
      }
      sum += l(i, j) / p(i, j);
      ++out.used;
    }
  }
  if (out.used > 0) {
    out.value = sum / static_cast<double>(out.used);
  } else {
    out.value = l.trace() / p.trace();
    out.trace_fallback = true;
  }
  return out;
}

QGTPoint extract_qgt(const ComplexMatrix& p_g, const ComplexMatrix& p_e,
                     const ComplexMatrix& dp_x, const ComplexMatrix& dp_y, double robust_eps) {
  if (!(robust_eps >= 0.0)) throw ConfigError("extract_qgt: robust_eps must be nonnegative");
  const ComplexMatrix id = ComplexMatrix::Identity(p_g.rows(), p_g.cols());
  if (max_abs(p_e - (id - p_g)) > 1e-8) {
    throw ConfigError("extract_qgt: P_e differs from I - P_g");
  }

  const ComplexMatrix lxy = dp_x * p_e * dp_y;
  const ComplexMatrix lyx = dp_y * p_e * dp_x;
  const ScalarRecovery gxx = recover_scalar(dp_x * p_e * dp_x, p_g, robust_eps);
  const ScalarRecovery gyy = recover_scalar(dp_y * p_e * dp_y, p_g, robust_eps);
  const ScalarRecovery gxy = recover_scalar(0.5 * (lxy + lyx), p_g, robust_eps);
  const ScalarRecovery fxy = recover_scalar(kI * (lxy - lyx), p_g, robust_eps);

  QGTPoint out;
  out.g_xx = gxx.value.real();
  out.g_yy = gyy.value.real();
  out.g_xy = gxy.value.real();
  out.f_xy = fxy.value.real();
  int excluded = 0;
  bool fallback = false;
  for (const ScalarRecovery* r : {&gxx, &gyy, &gxy, &fxy}) {
    out.residue = std::max(out.residue, std::abs(r->value.imag()));
    excluded = std::max(excluded, r->excluded);
    fallback = fallback || r->trace_fallback;
  }
  if (excluded > 0) out.flags.push_back("robust_excluded=" + std::to_string(excluded));
  if (fallback) out.flags.push_back("trace_fallback");
  return out;
}

QGTPoint exact_projector_qgt(const ModelPoint& p, double delta, DifferenceScheme scheme,
                             double robust_eps) {
  const ComplexMatrix pg = exact_ground_projector(p);
  const ComplexMatrix pe = ComplexMatrix::Identity(2, 2) - pg;
  auto at = [&](double dx, double dy) {
    return exact_ground_projector({p.kx + dx, p.ky + dy, p.m});
  };
  ComplexMatrix dpx, dpy;
  if (scheme == DifferenceScheme::kForward) {
    dpx = projector_derivative(pg, at(delta, 0.0), delta);
    dpy = projector_derivative(pg, at(0.0, delta), delta);
  } else {
    dpx = projector_derivative_central(at(-delta, 0.0), at(delta, 0.0), delta);
    dpy = projector_derivative_central(at(0.0, -delta), at(0.0, delta), delta);
  }
  return extract_qgt(pg, pe, dpx, dpy, robust_eps);
}

void GridSpec::validate() const {
  if (n < 3) throw ConfigError("grid: n must be at least 3");
  if (!(delta > 0.0 && delta < 2.0 * std::numbers::pi / n)) {
    throw ConfigError("grid: delta must lie in (0, 2 pi / n)");
  }
  if (!std::isfinite(m)) throw ConfigError("grid: m must be finite");
}

double chern_number(std::span<const double> f_xy, const GridSpec& grid) {
  if (grid.n < 1 || f_xy.size() != static_cast<std::size_t>(grid.size())) {
    throw ConfigError("chern_number: field does not cover the grid");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f_xy.size(); ++i) {
    if (!std::isfinite(f_xy[i])) {
      throw ConfigError("chern_number: missing value at grid point " + std::to_string(i));
    }
    sum += f_xy[i];
  }
  const double dk = 2.0 * std::numbers::pi / grid.n;
  return sum * dk * dk / (2.0 * std::numbers::pi);
}

}  // namespace qgtsim
