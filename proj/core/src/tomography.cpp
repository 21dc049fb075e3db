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

#include "qgtsim/tomography.hpp"

#include <cmath>
#include <numbers>

#include "qgtsim/errors.hpp"

namespace qgtsim {
namespace {

template <typename T>
QuasiCounts mitigate_impl(const BasicCounts<T>& c, double q) {
  if (!(q >= 0.0 && q < 0.5)) throw ConfigError("readout mitigation needs 0 <= q < 0.5");
  QuasiCounts out;
  out.shots = c.shots;
  out.seed = c.seed;
  if (c.histogram.empty()) return out;
  const std::size_t width = c.histogram.begin()->first.size();
  const std::size_t dim = std::size_t{1} << width;
  std::vector<double> p(dim, 0.0);
  double total = 0.0;
  for (const auto& [key, value] : c.histogram) {
    if (key.size() != width) throw ConfigError("readout mitigation: ragged bitstrings");
    std::size_t idx = 0;
    for (char ch : key) idx = (idx << 1) | (ch == '1' ? 1U : 0U);
    p[idx] += static_cast<double>(value);
    total += static_cast<double>(value);
  }
  for (double& v : p) v /= total;

  const double a = (1.0 - q) / (1.0 - 2.0 * q);
  const double b = -q / (1.0 - 2.0 * q);
  for (std::size_t bit = 0; bit < width; ++bit) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const double p0 = p[i];
      const double p1 = p[i | mask];
      p[i] = a * p0 + b * p1;
      p[i | mask] = b * p0 + a * p1;
    }
  }
  double kept = 0.0;
  for (double& v : p) {
    v = std::max(0.0, v);
    kept += v;
  }
  const double scale = (c.shots > 0 ? static_cast<double>(c.shots) : total) / kept;
  for (std::size_t i = 0; i < dim; ++i) {
    if (p[i] <= 0.0) continue;
    std::string key(width, '0');
    for (std::size_t j = 0; j < width; ++j) {
      if ((i >> (width - 1 - j)) & 1U) key[j] = '1';
    }
    out.histogram[key] = p[i] * scale;
  }
  return out;
}

}  // namespace

const char* pauli_name(Pauli p) {
  switch (p) {
    case Pauli::kX:
      return "x";
    case Pauli::kY:
      return "y";
    case Pauli::kZ:
      return "z";
  }
  return "?";
}

double& PauliExpectations::operator[](Pauli p) {
  return p == Pauli::kX ? sx : (p == Pauli::kY ? sy : sz);
}

double PauliExpectations::operator[](Pauli p) const {
  return p == Pauli::kX ? sx : (p == Pauli::kY ? sy : sz);
}

double PauliExpectations::bloch_norm() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }

template <typename T>
double expectation_from_counts(const BasicCounts<T>& c) {
  double n0 = 0.0;
  double n1 = 0.0;
  for (const auto& [key, value] : c.histogram) {
    if (key.size() != 1) throw ConfigError("expectation_from_counts expects single-bit counts");
    (key[0] == '0' ? n0 : n1) += static_cast<double>(value);
  }
  if (!(n0 + n1 > 0.0)) throw ConfigError("expectation_from_counts: empty histogram");
  return (n0 - n1) / (n0 + n1);
}

template double expectation_from_counts(const Counts&);
template double expectation_from_counts(const QuasiCounts&);

std::vector<Gate> basis_rotation_gates(Pauli p, int qubit) {
  switch (p) {
    case Pauli::kX:
      return {Gate::ry(qubit, -0.5 * std::numbers::pi)};
    case Pauli::kY:
      return {Gate::rx(qubit, 0.5 * std::numbers::pi)};
    case Pauli::kZ:
      return {};
  }
  return {};
}

double exact_expectation(const Statevector& psi, Pauli p) {
  if (psi.size() != 2) throw ConfigError("exact_expectation expects a single-qubit state");
  const ComplexMatrix& s = p == Pauli::kX ? pauli_x() : (p == Pauli::kY ? pauli_y() : pauli_z());
  return psi.dot(s * psi).real();
}

PauliExpectations exact_expectations(const Statevector& psi) {
  return {exact_expectation(psi, Pauli::kX), exact_expectation(psi, Pauli::kY),
          exact_expectation(psi, Pauli::kZ)};
}

ComplexMatrix reconstruct_projector(const PauliExpectations& e, bool purify) {
  double sx = e.sx, sy = e.sy, sz = e.sz;
  if (purify) {
    const double r = e.bloch_norm();
    if (!(r > 1e-12)) {
      throw Error("reconstruct_projector: Bloch vector vanishes, no unique pure state");
    }
    sx /= r;
    sy /= r;
    sz /= r;
  }
  ComplexMatrix p(2, 2);
  p(0, 0) = 0.5 * (1.0 + sz);
  p(1, 1) = 0.5 * (1.0 - sz);
  p(0, 1) = Complex(0.5 * sx, -0.5 * sy);
  p(1, 0) = Complex(0.5 * sx, 0.5 * sy);
  return p;
}

QuasiCounts readout_mitigation(const Counts& c, double q) { return mitigate_impl(c, q); }
QuasiCounts readout_mitigation(const QuasiCounts& c, double q) { return mitigate_impl(c, q); }

PauliMeasurement measure_pauli_expectations(const Circuit& prep, const Statevector& initial,
                                            int physical, int ancilla,
                                            const ExecutionMode& mode) {
  PauliMeasurement out;
  double success_sum = 0.0;
  for (Pauli p : {Pauli::kX, Pauli::kY, Pauli::kZ}) {
    Circuit c = prep;
    for (const Gate& g : basis_rotation_gates(p, physical)) c.gates.push_back(g);
    std::size_t ancilla_pos = 0;
    if (ancilla >= 0) {
      c.measure = ancilla < physical ? std::vector<int>{ancilla, physical}
                                     : std::vector<int>{physical, ancilla};
      ancilla_pos = ancilla < physical ? 0 : 1;
    } else {
      c.measure = {physical};
    }

    QuasiCounts dist;
    if (mode.exact) {
      dist = exact_distribution(run_statevector(c, initial), c.measure, c.num_qubits);
      dist.shots = 1;
    } else {
      const Counts raw = simulate(c, initial, mode.shots,
                                  mix_seed(mode.seed, static_cast<std::uint64_t>(p)), mode.noise);
      if (mode.mitigate) {
        dist = readout_mitigation(raw, mode.noise.readout_q);
      } else {
        dist.shots = raw.shots;
        dist.seed = raw.seed;
        for (const auto& [k, v] : raw.histogram) dist.histogram[k] = static_cast<double>(v);
      }
    }

    double success = 1.0;
    if (ancilla >= 0) {
      auto [kept, fraction] = post_select(dist, ancilla_pos, '0');
      dist = std::move(kept);
      success = fraction;
    }
    success_sum += success;
    out.expectations[p] = expectation_from_counts(dist);
  }
  out.success_fraction = success_sum / 3.0;
  return out;
}

}  // namespace qgtsim
