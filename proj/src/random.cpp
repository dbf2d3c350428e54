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

#include "pctc/random.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>

namespace pctc {

namespace {

Matrix ginibre(std::int64_t rows, std::int64_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

Vector random_state(std::int64_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = Complex(re, im);
  }
  v.normalize();
  return v;
}

Matrix random_unitary(std::int64_t dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (std::int64_t j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

Matrix random_density(std::int64_t dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Matrix w = g * g.adjoint();
  w /= w.trace().real();
  return (w + Matrix(w.adjoint())) / 2.0;
}

std::vector<Vector> random_independent_set(int n, std::int64_t d, Rng& rng, double min_ratio) {
  while (true) {
    Matrix cols(d, n);
    for (int j = 0; j < n; ++j) {
      cols.col(j) = random_state(d, rng);
    }
    Eigen::JacobiSVD<Matrix> svd(cols);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) / sv(0) > min_ratio) {
      std::vector<Vector> out;
      out.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) out.push_back(cols.col(j));
      return out;
    }
  }
}

std::vector<Matrix> random_measurement_ops(std::int64_t d, int n, Rng& rng) {
  // V = W (I (x) |0>) is a d*n x d isometry; its ancilla blocks are the M_k.
  const Matrix w = random_unitary(d * n, rng);
  Matrix v(d * n, d);
  for (std::int64_t s = 0; s < d; ++s) {
    v.col(s) = w.col(s * n);  // column for |s> (x) |0>
  }
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Matrix m(d, d);
    for (std::int64_t sp = 0; sp < d; ++sp) {
      for (std::int64_t s = 0; s < d; ++s) {
        m(sp, s) = v(sp * n + k, s);
      }
    }
    ops.push_back(std::move(m));
  }
  return ops;
}

}  // namespace pctc
