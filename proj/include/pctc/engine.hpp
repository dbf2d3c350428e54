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

#pragma once

#include <string>

#include "pctc/linalg.hpp"

namespace pctc {

/// Name reserved for the chronology-violating register.
inline constexpr const char* kCtcRegister = "CTC";

/// A joint unitary over a layout that contains a register named CTC. The
/// remaining registers are the chronology-respecting system.
class PctcCircuit {
 public:
  /// Validates that the layout names CTC, dimensions match, and the operator
  /// is unitary within 1e-10 (max norm of U^dag U - I).
  PctcCircuit(RegisterLayout layout, Operator unitary);

  const RegisterLayout& layout() const { return layout_; }
  const Operator& unitary() const { return unitary_; }
  /// Layout of the chronology-respecting subsystem (relative order kept).
  RegisterLayout system_layout() const { return layout_.without(kCtcRegister); }
  int ctc_qubits() const { return layout_.width_of(kCtcRegister); }

 private:
  RegisterLayout layout_;
  Operator unitary_;
};

/// The operator C the P-CTC induces on the chronology-respecting system.
/// Generally non-unitary; its global scale carries no physics, so every
/// consumer renormalizes. Carries the spectral norm for scale-aware paradox
/// thresholds.
class InducedMap {
 public:
  explicit InducedMap(Operator c);

  const Operator& c() const { return c_; }
  double sigma_max() const { return sigma_max_; }

 private:
  Operator c_;
  double sigma_max_ = 0.0;
};

/// C = Tr_CTC{U}. Throws NullEvolutionError when ||C||_2 <= tolerance: the
/// whole map is then undefined ("the evolution does not happen"), as opposed
/// to a per-input ParadoxError.
InducedMap induced_map(const PctcCircuit& circuit);

/// psi -> C psi / ||C psi||. Throws ParadoxError when
/// ||C psi|| <= tol * sigma_max(C) * ||psi||, the input-specific grandfather
/// paradox. The output layout is the input layout when C is square, otherwise
/// a single OUT register.
StateVector apply_pure(const InducedMap& map, const StateVector& psi);
/// Same map on a raw amplitude vector (any dimension, no layout bookkeeping).
Vector apply_pure_raw(const InducedMap& map, const Vector& psi);

/// rho -> C rho C^dag / Tr{C rho C^dag}. Throws ParadoxError when the trace
/// falls below tol^2 * sigma_max(C)^2.
DensityMatrix apply_mixed(const InducedMap& map, const DensityMatrix& rho);
Matrix apply_mixed_raw(const InducedMap& map, const Matrix& rho);

/// (1/sqrt(d)) sum_i |i>|i>.
struct MaxEntangledState {
  int d = 0;
  Vector amplitudes;

  static MaxEntangledState make(int d);
};

/// Independent oracle for the engine: runs the postselected-teleportation
/// protocol itself. Builds |psi> (x) |Phi>_AB, applies U to (system, A),
/// projects (A, B) onto |Phi>, renormalizes, and discards A and B. Must agree
/// with apply_pure(induced_map(circuit), psi) within trace distance 1e-9.
/// `psi` lives on the circuit's system layout (CTC removed).
StateVector teleportation_oracle(const PctcCircuit& circuit, const StateVector& psi);

/// Couplings for the retrocausality example: a maximally entangled AB pair
/// where B later interacts with a CTC qubit.
enum class RetroVariant {
  kCnotCoupling,     // CNOT from B to CTC: forces A to |0>
  kNoCoupling,       // identity instead of the CNOT: ordinary Born statistics
  kInvertedControl,  // coupling fires on |0>_B instead: forces A to |1>
};

/// Z-measurement distribution on A under postselection with certainty.
OutcomeDistribution retro_demo(RetroVariant variant = RetroVariant::kCnotCoupling);

}  // namespace pctc
