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

#include "pctc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

namespace pctc {

namespace {

std::atomic<int> g_max_qubits{24};
std::atomic<double> g_paradox_tolerance{1e-9};

void check_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw LayoutError(std::string(what) + ": entries must be finite (no NaN/Inf)");
  }
}

void check_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw LayoutError(std::string(what) + ": amplitudes must be finite (no NaN/Inf)");
  }
}

}  // namespace

int max_qubits() { return g_max_qubits.load(); }

void set_max_qubits(int n) {
  if (n < 1 || n > 62) {
    throw CapacityError("max qubits must be in [1, 62], got " + std::to_string(n));
  }
  g_max_qubits.store(n);
}

std::int64_t max_dimension() { return std::int64_t{1} << g_max_qubits.load(); }

double paradox_tolerance() { return g_paradox_tolerance.load(); }

void set_paradox_tolerance(double tol) {
  if (!(tol > 0)) {
    throw LayoutError("paradox tolerance must be positive");
  }
  g_paradox_tolerance.store(tol);
}

// ---------------------------------------------------------------------------
// RegisterLayout

RegisterLayout::RegisterLayout(std::initializer_list<Register> regs)
    : RegisterLayout(std::vector<Register>(regs)) {}

RegisterLayout::RegisterLayout(std::vector<Register> regs) : registers_(std::move(regs)) {
  validate();
  for (const auto& r : registers_) total_ += r.width;
  if (total_ > max_qubits()) {
    throw CapacityError("layout uses " + std::to_string(total_) + " qubits, capacity is " +
                        std::to_string(max_qubits()));
  }
}

void RegisterLayout::validate() const {
  std::set<std::string> seen;
  for (const auto& r : registers_) {
    if (r.name.empty()) throw LayoutError("register names must be nonempty");
    if (r.width < 1) throw LayoutError("register '" + r.name + "' must have width >= 1");
    if (!seen.insert(r.name).second) {
      throw LayoutError("duplicate register name '" + r.name + "'");
    }
  }
}

bool RegisterLayout::has(const std::string& name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return true;
  }
  return false;
}

int RegisterLayout::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name == name) return static_cast<int>(i);
  }
  throw LayoutError("unknown register '" + name + "'");
}

int RegisterLayout::width_of(const std::string& name) const {
  return registers_[static_cast<std::size_t>(index_of(name))].width;
}

int RegisterLayout::shift_of(int reg_index) const {
  int shift = 0;
  for (std::size_t i = static_cast<std::size_t>(reg_index) + 1; i < registers_.size(); ++i) {
    shift += registers_[i].width;
  }
  return shift;
}

RegisterLayout RegisterLayout::without(const std::string& name) const {
  index_of(name);  // throws when absent
  std::vector<Register> kept;
  for (const auto& r : registers_) {
    if (r.name != name) kept.push_back(r);
  }
  return RegisterLayout(std::move(kept));
}

RegisterLayout RegisterLayout::reordered(const std::vector<std::string>& new_order) const {
  if (new_order.size() != registers_.size()) {
    throw LayoutError("new order must list every register exactly once");
  }
  std::set<std::string> seen;
  std::vector<Register> regs;
  for (const auto& name : new_order) {
    if (!seen.insert(name).second) {
      throw LayoutError("register '" + name + "' repeated in new order");
    }
    regs.push_back(registers_[static_cast<std::size_t>(index_of(name))]);
  }
  return RegisterLayout(std::move(regs));
}

std::vector<std::string> RegisterLayout::names() const {
  std::vector<std::string> out;
  out.reserve(registers_.size());
  for (const auto& r : registers_) out.push_back(r.name);
  return out;
}

bool RegisterLayout::operator==(const RegisterLayout& other) const {
  if (registers_.size() != other.registers_.size()) return false;
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name != other.registers_[i].name ||
        registers_[i].width != other.registers_[i].width) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
  check_finite(entries_, "Operator");
}

Operator Operator::identity(std::int64_t n) { return Operator(Matrix::Identity(n, n)); }

Operator Operator::zero(std::int64_t rows, std::int64_t cols) {
  return Operator(Matrix::Zero(rows, cols));
}

Operator Operator::operator*(const Operator& rhs) const {
  if (cols() != rhs.rows()) {
    throw LayoutError("operator product dimension mismatch: " + std::to_string(cols()) +
                      " vs " + std::to_string(rhs.rows()));
  }
  return Operator(entries_ * rhs.entries_);
}

Operator Operator::operator+(const Operator& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw LayoutError("operator sum dimension mismatch");
  }
  return Operator(entries_ + rhs.entries_);
}

Operator Operator::operator-(const Operator& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw LayoutError("operator difference dimension mismatch");
  }
  return Operator(entries_ - rhs.entries_);
}

double Operator::unitarity_residual() const {
  if (rows() != cols()) return 1.0;
  Matrix g = entries_.adjoint() * entries_;
  g -= Matrix::Identity(rows(), rows());
  return g.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(RegisterLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  check_finite(amplitudes_, "StateVector");
  if (amplitudes_.size() != layout_.dim()) {
    throw LayoutError("amplitude count " + std::to_string(amplitudes_.size()) +
                      " does not match layout dimension " + std::to_string(layout_.dim()));
  }
  const double norm = amplitudes_.norm();
  if (norm < 1e-12) {
    throw LayoutError("cannot construct a state from a (near-)zero vector");
  }
  if (std::abs(norm - 1.0) > 1e-12) {
    amplitudes_ /= norm;
  }
}

StateVector::StateVector(RegisterLayout layout, Vector amplitudes, unchecked_t)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis_state(RegisterLayout layout, std::uint64_t index) {
  const std::int64_t dim = layout.dim();
  if (static_cast<std::int64_t>(index) >= dim) {
    throw LayoutError("basis index out of range");
  }
  Vector v = Vector::Zero(dim);
  v[static_cast<std::int64_t>(index)] = Complex(1.0, 0.0);
  return StateVector(std::move(layout), std::move(v), unchecked_t{});
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(RegisterLayout layout, Matrix entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  check_finite(entries_, "DensityMatrix");
  if (entries_.rows() != layout_.dim() || entries_.cols() != layout_.dim()) {
    throw LayoutError("density matrix dimension does not match layout");
  }
  if (max_abs_diff(entries_, entries_.adjoint()) > 1e-12) {
    throw LayoutError("density matrix must be Hermitian within 1e-12");
  }
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > 1e-12) {
    throw LayoutError("density matrix must have unit trace within 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw LayoutError("density matrix must be positive semidefinite (eig >= -1e-10)");
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return DensityMatrix(psi.layout(), psi.amps() * psi.amps().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(RegisterLayout layout) {
  const std::int64_t d = layout.dim();
  return DensityMatrix(std::move(layout),
                       Matrix::Identity(d, d) / static_cast<double>(d));
}

// ---------------------------------------------------------------------------
// Tensor products

Operator tensor(const Operator& a, const Operator& b) {
  if (a.rows() * b.rows() > max_dimension() || a.cols() * b.cols() > max_dimension()) {
    throw CapacityError("tensor product exceeds the configured capacity of 2^" +
                        std::to_string(max_qubits()));
  }
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a.mat()(i, j) * b.mat();
    }
  }
  return Operator(std::move(out));
}

Vector kron(const Vector& a, const Vector& b) {
  if (a.size() * b.size() > max_dimension()) {
    throw CapacityError("tensor product exceeds the configured capacity");
  }
  Vector out(a.size() * b.size());
  for (std::int64_t i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<RegisterLayout::Register> regs = a.layout().registers();
  for (const auto& r : b.layout().registers()) regs.push_back(r);
  // Product of unit vectors; norm drift is at the rounding level, no renormalize.
  return StateVector(RegisterLayout(std::move(regs)), kron(a.amps(), b.amps()),
                     StateVector::unchecked_t{});
}

// ---------------------------------------------------------------------------
// Register permutation

namespace {

// For each old basis index, the corresponding index after reordering registers.
std::vector<std::int64_t> permutation_map(const RegisterLayout& layout,
                                          const std::vector<std::string>& new_order) {
  const RegisterLayout target = layout.reordered(new_order);
  const std::size_t k = layout.registers().size();

  std::vector<int> old_shift(k), width(k);
  for (std::size_t i = 0; i < k; ++i) {
    old_shift[i] = layout.shift_of(static_cast<int>(i));
    width[i] = layout.registers()[i].width;
  }
  // new_shift_for_old[i]: shift of old register i in the target layout.
  std::vector<int> new_shift_for_old(k);
  for (std::size_t t = 0; t < k; ++t) {
    const int old_i = layout.index_of(new_order[t]);
    new_shift_for_old[static_cast<std::size_t>(old_i)] = target.shift_of(static_cast<int>(t));
  }

  const std::int64_t dim = layout.dim();
  std::vector<std::int64_t> map(static_cast<std::size_t>(dim));
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t value = (idx >> old_shift[i]) & ((std::int64_t{1} << width[i]) - 1);
      out |= value << new_shift_for_old[i];
    }
    map[static_cast<std::size_t>(idx)] = out;
  }
  return map;
}

}  // namespace

StateVector permute_registers(const StateVector& s, const std::vector<std::string>& new_order) {
  const auto map = permutation_map(s.layout(), new_order);
  Vector out(s.dim());
  for (std::int64_t i = 0; i < s.dim(); ++i) {
    out[map[static_cast<std::size_t>(i)]] = s.amps()[i];
  }
  return StateVector(s.layout().reordered(new_order), std::move(out),
                     StateVector::unchecked_t{});
}

Operator permute_registers(const Operator& op, const RegisterLayout& layout,
                           const std::vector<std::string>& new_order) {
  if (op.rows() != layout.dim() || op.cols() != layout.dim()) {
    throw LayoutError("operator dimension does not match layout");
  }
  const auto map = permutation_map(layout, new_order);
  Matrix out(op.rows(), op.cols());
  for (std::int64_t i = 0; i < op.rows(); ++i) {
    const std::int64_t pi = map[static_cast<std::size_t>(i)];
    for (std::int64_t j = 0; j < op.cols(); ++j) {
      out(pi, map[static_cast<std::size_t>(j)]) = op.mat()(i, j);
    }
  }
  return Operator(std::move(out));
}

// ---------------------------------------------------------------------------
// Partial trace

Operator partial_trace(const Operator& u, const RegisterLayout& layout,
                       const std::string& traced) {
  if (u.rows() != u.cols()) {
    throw LayoutError("partial trace requires a square operator");
  }
  if (u.rows() != layout.dim()) {
    throw LayoutError("operator dimension does not match layout");
  }
  const int ti = layout.index_of(traced);

  const Operator* work = &u;
  Operator permuted;
  if (static_cast<std::size_t>(ti) + 1 != layout.registers().size()) {
    std::vector<std::string> order;
    for (const auto& r : layout.registers()) {
      if (r.name != traced) order.push_back(r.name);
    }
    order.push_back(traced);
    permuted = permute_registers(u, layout, order);
    work = &permuted;
  }

  const std::int64_t dt = std::int64_t{1} << layout.width_of(traced);
  const std::int64_t dr = u.rows() / dt;
  Matrix out = Matrix::Zero(dr, dr);
  for (std::int64_t i = 0; i < dr; ++i) {
    for (std::int64_t j = 0; j < dr; ++j) {
      Complex acc(0.0, 0.0);
      for (std::int64_t k = 0; k < dt; ++k) {
        acc += work->mat()(i * dt + k, j * dt + k);
      }
      out(i, j) = acc;
    }
  }
  return Operator(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::string& traced) {
  Operator reduced = partial_trace(Operator(rho.mat()), rho.layout(), traced);
  Matrix m = reduced.mat();
  m = (m + Matrix(m.adjoint())) / 2.0;  // scrub rounding-level asymmetry
  return DensityMatrix(rho.layout().without(traced), std::move(m));
}

// ---------------------------------------------------------------------------
// Norms and distances

std::vector<double> singular_values(const Operator& m) {
  Eigen::JacobiSVD<Matrix> svd(m.mat());
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double spectral_norm(const Operator& m) {
  const std::int64_t n = std::min(m.rows(), m.cols());
  if (n == 0) return 0.0;
  if (n <= 256) {
    Eigen::JacobiSVD<Matrix> svd(m.mat());
    return svd.singularValues()(0);
  }
  // Deterministic power iteration on M†M, seeded with the column-norm profile
  // (never orthogonal to the top singular space in practice).
  Vector v(m.cols());
  for (std::int64_t j = 0; j < m.cols(); ++j) {
    v[j] = Complex(m.mat().col(j).norm() + 1e-300, 0.0);
  }
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 80; ++it) {
    Vector w = m.mat() * v;
    sigma = w.norm();
    if (sigma == 0.0) break;
    v = m.mat().adjoint() * w;
    const double nv = v.norm();
    if (nv == 0.0) break;
    v /= nv;
  }
  const double col_max = m.mat().colwise().norm().maxCoeff();
  return std::max(sigma, col_max);
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double fidelity(const Vector& a, const Vector& b) {
  const Complex ov = a.adjoint() * b;
  return std::norm(ov);
}

double trace_distance(const Vector& a, const Vector& b) {
  const double f = std::min(1.0, fidelity(a, b));
  return std::sqrt(1.0 - f);
}

double trace_distance(const StateVector& a, const StateVector& b) {
  return trace_distance(a.amps(), b.amps());
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return 0.5 * trace_norm(a.mat() - b.mat());
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw LayoutError("max_abs_diff dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

std::string format_bits(std::uint64_t value, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Measurement marginals

OutcomeDistribution measure_registers(const StateVector& s,
                                      const std::vector<std::string>& names) {
  const RegisterLayout& layout = s.layout();
  struct Field {
    int shift;
    int width;
  };
  std::vector<Field> fields;
  int total_width = 0;
  for (const auto& name : names) {
    const int ri = layout.index_of(name);
    fields.push_back({layout.shift_of(ri), layout.registers()[static_cast<std::size_t>(ri)].width});
    total_width += fields.back().width;
  }

  std::map<std::uint64_t, double> acc;
  for (std::int64_t idx = 0; idx < s.dim(); ++idx) {
    const double p = std::norm(s.amps()[idx]);
    if (p == 0.0) continue;
    std::uint64_t key = 0;
    for (const auto& f : fields) {
      const std::uint64_t value =
          (static_cast<std::uint64_t>(idx) >> f.shift) & ((std::uint64_t{1} << f.width) - 1);
      key = (key << f.width) | value;
    }
    acc[key] += p;
  }

  OutcomeDistribution out;
  for (const auto& [key, p] : acc) {
    if (p >= 1e-15) out[format_bits(key, total_width)] = p;
  }
  return out;
}

OutcomeDistribution measure_register(const StateVector& s, const std::string& name) {
  return measure_registers(s, {name});
}

OutcomeDistribution measure_all(const StateVector& s) {
  return measure_registers(s, s.layout().names());
}

OutcomeDistribution measure_register(const DensityMatrix& rho, const std::string& name) {
  const RegisterLayout& layout = rho.layout();
  const int ri = layout.index_of(name);
  const int shift = layout.shift_of(ri);
  const int width = layout.registers()[static_cast<std::size_t>(ri)].width;

  std::map<std::uint64_t, double> acc;
  for (std::int64_t idx = 0; idx < rho.dim(); ++idx) {
    const double p = rho.mat()(idx, idx).real();
    const std::uint64_t value =
        (static_cast<std::uint64_t>(idx) >> shift) & ((std::uint64_t{1} << width) - 1);
    acc[value] += p;
  }
  OutcomeDistribution out;
  for (const auto& [value, p] : acc) {
    if (p >= 1e-15) out[format_bits(value, width)] = p;
  }
  return out;
}

}  // namespace pctc
