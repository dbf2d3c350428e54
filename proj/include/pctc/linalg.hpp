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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pctc/errors.hpp"

namespace pctc {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Probabilities keyed by computational-basis bitstrings.
using OutcomeDistribution = std::map<std::string, double>;

/// Dense-simulation capacity, as a total qubit count (dimension 2^n).
/// Default 24; the CLI overrides it via --max-qubits / PCTC_MAX_QUBITS.
int max_qubits();
void set_max_qubits(int n);
std::int64_t max_dimension();

/// Relative threshold below which an induced-operator output counts as
/// annihilated (grandfather paradox). Default 1e-9.
double paradox_tolerance();
void set_paradox_tolerance(double tol);

/// An ordered list of named qubit registers.
///
/// Index convention used throughout: the first register occupies the most
/// significant bits of a basis index, and within a register earlier qubits
/// are more significant. So for registers (A,1),(B,2) the basis index of
/// |a b1 b0> is a*4 + b1*2 + b0.
class RegisterLayout {
 public:
  struct Register {
    std::string name;
    int width = 0;
  };

  RegisterLayout() = default;
  RegisterLayout(std::initializer_list<Register> regs);
  explicit RegisterLayout(std::vector<Register> regs);

  const std::vector<Register>& registers() const { return registers_; }
  bool empty() const { return registers_.empty(); }
  int total_qubits() const { return total_; }
  std::int64_t dim() const { return std::int64_t{1} << total_; }

  bool has(const std::string& name) const;
  int index_of(const std::string& name) const;  // LayoutError when absent
  int width_of(const std::string& name) const;
  /// Number of bits strictly less significant than register `reg_index`.
  int shift_of(int reg_index) const;

  /// Layout with `name` removed (other registers keep their relative order).
  RegisterLayout without(const std::string& name) const;
  /// Layout listing registers in `new_order`; must be a permutation of names.
  RegisterLayout reordered(const std::vector<std::string>& new_order) const;
  std::vector<std::string> names() const;

  bool operator==(const RegisterLayout& other) const;

 private:
  void validate() const;

  std::vector<Register> registers_;
  int total_ = 0;
};

/// Dense complex matrix with explicit output/input dimensions. Unitarity is
/// not an invariant: induced operators C are generally non-unitary.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix entries);  // rejects NaN/Inf entries

  static Operator identity(std::int64_t n);
  static Operator zero(std::int64_t rows, std::int64_t cols);

  std::int64_t rows() const { return entries_.rows(); }
  std::int64_t cols() const { return entries_.cols(); }
  const Matrix& mat() const { return entries_; }

  Operator adjoint() const { return Operator(entries_.adjoint()); }
  Operator operator*(const Operator& rhs) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  friend Operator operator*(const Complex& s, const Operator& op) {
    return Operator(s * op.entries_);
  }

  /// max |(U†U - I)_ij|; the unitarity residual used by circuit validation.
  double unitarity_residual() const;
  bool is_unitary(double tol = 1e-10) const { return unitarity_residual() <= tol; }

 private:
  Matrix entries_;
};

/// Unit-norm amplitude vector over a RegisterLayout. Public constructors
/// leave already-normalized input untouched and renormalize anything else;
/// a zero vector is rejected.
class StateVector {
 public:
  StateVector(RegisterLayout layout, Vector amplitudes);

  static StateVector basis_state(RegisterLayout layout, std::uint64_t index);

  const RegisterLayout& layout() const { return layout_; }
  const Vector& amps() const { return amplitudes_; }
  std::int64_t dim() const { return amplitudes_.size(); }

 private:
  struct unchecked_t {};
  StateVector(RegisterLayout layout, Vector amplitudes, unchecked_t);

  friend StateVector permute_registers(const StateVector& s,
                                       const std::vector<std::string>& new_order);
  friend StateVector tensor(const StateVector& a, const StateVector& b);

  RegisterLayout layout_;
  Vector amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix over a layout.
class DensityMatrix {
 public:
  DensityMatrix(RegisterLayout layout, Matrix entries);

  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(RegisterLayout layout);

  const RegisterLayout& layout() const { return layout_; }
  const Matrix& mat() const { return entries_; }
  std::int64_t dim() const { return entries_.rows(); }

 private:
  RegisterLayout layout_;
  Matrix entries_;
};

/// Kronecker product; entry (i1*cols_b + i2, j1*cols_b + j2) = a(i1,j1)*b(i2,j2).
Operator tensor(const Operator& a, const Operator& b);
Vector kron(const Vector& a, const Vector& b);
/// Tensor product of states; layouts are concatenated (names must stay unique).
StateVector tensor(const StateVector& a, const StateVector& b);

/// Sum_j (I (x) <j|) u (I (x) |j>) with the traced register moved to the last
/// tensor slot; the remaining registers keep their relative order. Not
/// normalized: for a traced register of width w, the trace of the result is
/// Tr{u}, not Tr{u}/2^w.
Operator partial_trace(const Operator& u, const RegisterLayout& layout,
                       const std::string& traced);
/// Partial trace of a density matrix over one named register.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::string& traced);

/// Reindexes amplitudes/entries so the layout lists registers in `new_order`.
/// A pure permutation: applying the inverse order restores the input bit-exactly.
StateVector permute_registers(const StateVector& s, const std::vector<std::string>& new_order);
Operator permute_registers(const Operator& op, const RegisterLayout& layout,
                           const std::vector<std::string>& new_order);

/// Standard singular values, descending, length min(rows, cols).
std::vector<double> singular_values(const Operator& m);

/// Largest singular value. Exact for small matrices; for large ones a
/// deterministic power-iteration estimate, adequate for scale-aware tolerances.
double spectral_norm(const Operator& m);

double trace_norm(const Matrix& m);  // sum of singular values

/// |<a|b>|^2 for unit vectors.
double fidelity(const Vector& a, const Vector& b);
/// Trace distance between pure states: sqrt(1 - |<a|b>|^2).
double trace_distance(const StateVector& a, const StateVector& b);
double trace_distance(const Vector& a, const Vector& b);
/// Trace distance between density matrices: 0.5 * ||a - b||_tr.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);

/// `width`-character binary string, most significant bit first.
std::string format_bits(std::uint64_t value, int width);

/// Marginal measurement distribution of the listed registers (keys are their
/// bit values concatenated in the listed order). Entries below 1e-15 are dropped.
OutcomeDistribution measure_registers(const StateVector& s, const std::vector<std::string>& names);
OutcomeDistribution measure_register(const StateVector& s, const std::string& name);
OutcomeDistribution measure_all(const StateVector& s);
/// Diagonal distribution of a density matrix restricted to one register.
OutcomeDistribution measure_register(const DensityMatrix& rho, const std::string& name);

}  // namespace pctc
