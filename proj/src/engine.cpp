// Copyright 2026 The pctc-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pctc/engine.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace pctc {

namespace {

// Power-of-two check plus width extraction for OUT registers.
int exact_log2(std::int64_t dim) {
  int w = 0;
  std::int64_t v = 1;
  while (v < dim) {
    v <<= 1;
    ++w;
  }
  if (v != dim) {
    throw LayoutError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return w;
}

}  // namespace

PctcCircuit::PctcCircuit(RegisterLayout layout, Operator unitary)
    : layout_(std::move(layout)), unitary_(std::move(unitary)) {
  if (!layout_.has(kCtcRegister)) {
    throw LayoutError("a P-CTC circuit layout must contain a register named CTC");
  }
  if (unitary_.rows() != layout_.dim() || unitary_.cols() != layout_.dim()) {
    throw LayoutError("circuit unitary dimension does not match layout");
  }
  const double residual = unitary_.unitarity_residual();
  if (residual > 1e-10) {
    throw LayoutError("circuit operator is not unitary (residual " +
                      std::to_string(residual) + ")");
  }
}

InducedMap::InducedMap(Operator c) : c_(std::move(c)), sigma_max_(spectral_norm(c_)) {}

InducedMap induced_map(const PctcCircuit& circuit) {
  InducedMap map(partial_trace(circuit.unitary(), circuit.layout(), kCtcRegister));
  if (map.sigma_max() <= paradox_tolerance()) {
    throw NullEvolutionError(
        "induced operator is numerically null; the evolution does not happen "
        "(spectral norm " +
        std::to_string(map.sigma_max()) + ")");
  }
  return map;
}

Vector apply_pure_raw(const InducedMap& map, const Vector& psi) {
  if (map.c().cols() != psi.size()) {
    throw LayoutError("induced map expects dimension " + std::to_string(map.c().cols()) +
                      ", state has " + std::to_string(psi.size()));
  }
  Vector out = map.c().mat() * psi;
  const double norm = out.norm();
  if (norm <= paradox_tolerance() * map.sigma_max() * psi.norm()) {
    throw ParadoxError("induced operator annihilates this input (grandfather paradox)");
  }
  out /= norm;
  return out;
}

StateVector apply_pure(const InducedMap& map, const StateVector& psi) {
  Vector out = apply_pure_raw(map, psi.amps());
  if (map.c().rows() == psi.dim()) {
    return StateVector(psi.layout(), std::move(out));
  }
  return StateVector(RegisterLayout{{"OUT", exact_log2(map.c().rows())}}, std::move(out));
}

Matrix apply_mixed_raw(const InducedMap& map, const Matrix& rho) {
  if (map.c().cols() != rho.rows() || rho.rows() != rho.cols()) {
    throw LayoutError("induced map and density matrix dimensions do not match");
  }
  Matrix out = map.c().mat() * rho * map.c().mat().adjoint();
  const double tr = out.trace().real();
  const double floor = paradox_tolerance() * paradox_tolerance() * map.sigma_max() *
                       map.sigma_max();
  if (tr <= floor) {
    throw ParadoxError("induced operator annihilates this mixed input");
  }
  out /= tr;
  return (out + Matrix(out.adjoint())) / 2.0;
}

DensityMatrix apply_mixed(const InducedMap& map, const DensityMatrix& rho) {
  Matrix out = apply_mixed_raw(map, rho.mat());
  if (map.c().rows() == rho.dim()) {
    return DensityMatrix(rho.layout(), std::move(out));
  }
  return DensityMatrix(RegisterLayout{{"OUT", exact_log2(map.c().rows())}}, std::move(out));
}

MaxEntangledState MaxEntangledState::make(int d) {
  if (d < 1) throw LayoutError("entangled-state dimension must be positive");
  MaxEntangledState s;
  s.d = d;
  s.amplitudes = Vector::Zero(std::int64_t{d} * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    s.amplitudes[static_cast<std::int64_t>(i) * d + i] = Complex(amp, 0.0);
  }
  return s;
}

StateVector teleportation_oracle(const PctcCircuit& circuit, const StateVector& psi) {
  // Work with the CTC register in the last tensor slot.
  std::vector<std::string> order;
  for (const auto& r : circuit.layout().registers()) {
    if (r.name != kCtcRegister) order.push_back(r.name);
  }
  order.push_back(kCtcRegister);
  const Operator u = permute_registers(circuit.unitary(), circuit.layout(), order);

  const RegisterLayout sys_layout = circuit.system_layout();
  if (!(psi.layout() == sys_layout)) {
    throw LayoutError("input state layout must equal the circuit layout minus CTC");
  }

  const std::int64_t ds = sys_layout.dim();
  const int d = 1 << circuit.ctc_qubits();
  const MaxEntangledState phi = MaxEntangledState::make(d);

  // |psi>_SYS (x) |Phi>_AB, then U on (SYS, A).
  Vector big = kron(psi.amps(), phi.amplitudes);
  const std::int64_t big_dim = ds * d * d;
  Vector evolved = Vector::Zero(big_dim);
  // U acts on the first ds*d amplitudes' (sys, a) indices; B rides along.
  for (std::int64_t b = 0; b < d; ++b) {
    Vector slice(ds * d);
    for (std::int64_t sa = 0; sa < ds * d; ++sa) {
      slice[sa] = big[sa * d + b];
    }
    const Vector out = u.mat() * slice;
    for (std::int64_t sa = 0; sa < ds * d; ++sa) {
      evolved[sa * d + b] = out[sa];
    }
  }

  // Project (A, B) onto |Phi> and discard them.
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  Vector projected = Vector::Zero(ds);
  for (std::int64_t s = 0; s < ds; ++s) {
    Complex acc(0.0, 0.0);
    for (std::int64_t a = 0; a < d; ++a) {
      acc += evolved[(s * d + a) * d + a];
    }
    projected[s] = amp * acc;
  }

  // The projected vector is C psi / d; rescale before the shared paradox test.
  const double norm = projected.norm() * d;
  const double sigma = spectral_norm(partial_trace(u, circuit.layout().reordered(order),
                                                   kCtcRegister));
  if (norm <= paradox_tolerance() * sigma * psi.amps().norm()) {
    throw ParadoxError("postselected teleportation annihilates this input");
  }
  projected /= projected.norm();
  return StateVector(sys_layout, std::move(projected));
}

OutcomeDistribution retro_demo(RetroVariant variant) {
  const RegisterLayout layout{{"A", 1}, {"B", 1}, {kCtcRegister, 1}};

  // Coupling from B to the CTC qubit; A is a bystander.
  Matrix coupling = Matrix::Zero(4, 4);
  switch (variant) {
    case RetroVariant::kCnotCoupling:
      coupling(0b00, 0b00) = 1;
      coupling(0b01, 0b01) = 1;
      coupling(0b11, 0b10) = 1;
      coupling(0b10, 0b11) = 1;
      break;
    case RetroVariant::kNoCoupling:
      coupling = Matrix::Identity(4, 4);
      break;
    case RetroVariant::kInvertedControl:
      coupling(0b01, 0b00) = 1;
      coupling(0b00, 0b01) = 1;
      coupling(0b10, 0b10) = 1;
      coupling(0b11, 0b11) = 1;
      break;
  }
  const Operator u = tensor(Operator::identity(2), Operator(coupling));
  const PctcCircuit circuit(layout, u);

  Vector bell = Vector::Zero(4);
  bell[0b00] = 1.0 / std::sqrt(2.0);
  bell[0b11] = 1.0 / std::sqrt(2.0);
  const StateVector input(RegisterLayout{{"A", 1}, {"B", 1}}, bell);

  const StateVector out = apply_pure(induced_map(circuit), input);
  return measure_register(out, "A");
}

}  // namespace pctc
