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

#include <cmath>

#include "doctest.h"
#include "pctc/linalg.hpp"
#include "pctc/random.hpp"
#include "test_helpers.hpp"

using namespace pctc;
using namespace pctc::testing;

TEST_SUITE("linalg.layout") {
  TEST_CASE("index conventions put the first register in the high bits") {
    RegisterLayout layout{{"A", 1}, {"B", 2}};
    CHECK(layout.total_qubits() == 3);
    CHECK(layout.dim() == 8);
    CHECK(layout.shift_of(0) == 2);
    CHECK(layout.shift_of(1) == 0);
    CHECK(layout.index_of("B") == 1);
    CHECK_THROWS_AS(layout.index_of("C"), LayoutError);
  }

  TEST_CASE("invalid layouts are rejected") {
    CHECK_THROWS_AS(RegisterLayout({{"A", 1}, {"A", 1}}), LayoutError);
    CHECK_THROWS_AS(RegisterLayout({{"A", 0}}), LayoutError);
    CHECK_THROWS_AS(RegisterLayout({{"", 1}}), LayoutError);
  }
}

TEST_SUITE("linalg.tensor") {
  TEST_CASE("identity times identity") {
    const Operator i2 = Operator::identity(2);
    const Operator i4 = tensor(i2, i2);
    CHECK(max_abs_diff(i4.mat(), Matrix::Identity(4, 4)) == 0.0);
  }

  TEST_CASE("X tensor X flips both qubits") {
    const Operator xx = tensor(Operator(mat_x()), Operator(mat_x()));
    Vector v00 = Vector::Zero(4);
    v00[0] = 1;
    const Vector out = xx.mat() * v00;
    CHECK(std::abs(out[3] - Complex(1, 0)) < 1e-15);
    CHECK(out.head(3).norm() < 1e-15);
  }

  TEST_CASE("projector decomposition reassembles CNOT") {
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    Matrix p1 = Matrix::Zero(2, 2);
    p1(1, 1) = 1;
    const Operator built =
        tensor(Operator(p0), Operator::identity(2)) + tensor(Operator(p1), Operator(mat_x()));
    CHECK(max_abs_diff(built.mat(), mat_cnot()) < 1e-15);
  }

  TEST_CASE("capacity limit is enforced") {
    const int keep = max_qubits();
    set_max_qubits(3);
    const Operator i4 = Operator::identity(4);
    CHECK_THROWS_AS(tensor(i4, i4), CapacityError);
    set_max_qubits(keep);
  }

  TEST_CASE("associativity") {
    auto rng = make_rng(11);
    const Operator a(random_unitary(2, rng));
    const Operator b(random_unitary(4, rng));
    const Operator c(random_unitary(2, rng));
    const Operator left = tensor(tensor(a, b), c);
    const Operator right = tensor(a, tensor(b, c));
    CHECK(max_abs_diff(left.mat(), right.mat()) < 1e-12);
  }
}

TEST_SUITE("linalg.partial_trace") {
  TEST_CASE("factorized operator: Tr_2{A (x) B} = Tr{B} A") {
    auto rng = make_rng(21);
    const Matrix a = random_unitary(4, rng);
    const Matrix b = random_unitary(2, rng);
    const RegisterLayout layout{{"A", 2}, {"B", 1}};
    const Operator reduced = partial_trace(tensor(Operator(a), Operator(b)), layout, "B");
    const Matrix expected = b.trace() * a;
    CHECK(max_abs_diff(reduced.mat(), expected) < 1e-12);
  }

  TEST_CASE("SWAP traced over the second qubit is the identity") {
    const RegisterLayout layout{{"SYS", 1}, {"CTC", 1}};
    const Operator reduced = partial_trace(Operator(mat_swap()), layout, "CTC");
    // Oracle: direct summation over the traced index.
    const Matrix expected = pt_oracle(mat_swap(), 0, 1);
    CHECK(max_abs_diff(reduced.mat(), expected) < 1e-15);
    CHECK(max_abs_diff(reduced.mat(), Matrix::Identity(2, 2)) < 1e-15);
  }

  TEST_CASE("CNOT traced over its target leaves 2|0><0|") {
    const RegisterLayout layout{{"SYS", 1}, {"CTC", 1}};
    const Operator reduced = partial_trace(Operator(mat_cnot()), layout, "CTC");
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 2;  // Tr{I} = 2 on the control-0 block, Tr{X} = 0 on the other
    CHECK(max_abs_diff(reduced.mat(), expected) < 1e-15);
  }

  TEST_CASE("tracing a register that is not last matches the index oracle") {
    auto rng = make_rng(22);
    const RegisterLayout layout{{"A", 1}, {"B", 2}, {"C", 1}};
    const Matrix u = random_unitary(layout.dim(), rng);
    SUBCASE("middle register") {
      const Operator reduced = partial_trace(Operator(u), layout, "B");
      CHECK(max_abs_diff(reduced.mat(), pt_oracle(u, 1, 2)) < 1e-12);
    }
    SUBCASE("first register") {
      const Operator reduced = partial_trace(Operator(u), layout, "A");
      CHECK(max_abs_diff(reduced.mat(), pt_oracle(u, 3, 1)) < 1e-12);
    }
  }

  TEST_CASE("trace consistency on random unitaries up to 5 qubits") {
    auto rng = make_rng(23);
    for (int qubits = 2; qubits <= 5; ++qubits) {
      RegisterLayout layout{{"A", 1}, {"B", qubits - 1}};
      const Matrix u = random_unitary(layout.dim(), rng);
      for (const auto& name : layout.names()) {
        const Operator reduced = partial_trace(Operator(u), layout, name);
        CHECK(std::abs(reduced.mat().trace() - u.trace()) <= 1e-12);
      }
    }
  }

  TEST_CASE("linearity") {
    auto rng = make_rng(24);
    const RegisterLayout layout{{"A", 1}, {"B", 1}};
    const Matrix u = random_unitary(4, rng);
    const Matrix v = random_unitary(4, rng);
    const Complex alpha(0.3, -1.1), beta(-0.7, 0.2);
    const Operator lhs = partial_trace(Operator(alpha * u + beta * v), layout, "B");
    const Matrix rhs = alpha * partial_trace(Operator(u), layout, "B").mat() +
                       beta * partial_trace(Operator(v), layout, "B").mat();
    CHECK(max_abs_diff(lhs.mat(), rhs) < 1e-12);
  }

  TEST_CASE("unknown register raises LayoutError") {
    const RegisterLayout layout{{"A", 1}, {"B", 1}};
    CHECK_THROWS_AS(partial_trace(Operator(mat_swap()), layout, "Z"), LayoutError);
  }
}

TEST_SUITE("linalg.permute") {
  TEST_CASE("two-qubit label swap") {
    const RegisterLayout layout{{"A", 1}, {"B", 1}};
    const StateVector s = StateVector::basis_state(layout, 0b01);
    const StateVector p = permute_registers(s, {"B", "A"});
    CHECK(std::abs(p.amps()[0b10] - Complex(1, 0)) == 0.0);
  }

  TEST_CASE("round trip restores a random 4-qubit state bit-exactly") {
    auto rng = make_rng(31);
    const RegisterLayout layout{{"A", 1}, {"B", 2}, {"C", 1}};
    const StateVector s(layout, random_state(16, rng));
    const StateVector p = permute_registers(s, {"C", "A", "B"});
    const StateVector back = permute_registers(p, {"A", "B", "C"});
    REQUIRE(back.layout() == layout);
    for (int i = 0; i < 16; ++i) {
      CHECK(back.amps()[i] == s.amps()[i]);  // bit-exact
    }
    CHECK(p.amps().norm() == s.amps().norm());
  }

  TEST_CASE("permuted CNOT equals the hand-built reversed CNOT") {
    const RegisterLayout layout{{"control", 1}, {"target", 1}};
    const Operator p = permute_registers(Operator(mat_cnot()), layout, {"target", "control"});
    // Reversed CNOT: |t c> -> |t xor c, c>.
    Matrix expected = Matrix::Zero(4, 4);
    expected(0b00, 0b00) = 1;
    expected(0b11, 0b01) = 1;
    expected(0b10, 0b10) = 1;
    expected(0b01, 0b11) = 1;
    CHECK(max_abs_diff(p.mat(), expected) == 0.0);
  }

  TEST_CASE("operator Frobenius norm is preserved") {
    auto rng = make_rng(32);
    const RegisterLayout layout{{"A", 2}, {"B", 1}};
    const Matrix u = random_unitary(8, rng);
    const Operator p = permute_registers(Operator(u), layout, {"B", "A"});
    CHECK(std::abs(p.mat().norm() - u.norm()) < 1e-12);
  }

  TEST_CASE("non-permutations are rejected") {
    const RegisterLayout layout{{"A", 1}, {"B", 1}};
    const StateVector s = StateVector::basis_state(layout, 0);
    CHECK_THROWS_AS(permute_registers(s, {"A", "A"}), LayoutError);
    CHECK_THROWS_AS(permute_registers(s, {"A"}), LayoutError);
    CHECK_THROWS_AS(permute_registers(s, {"A", "Z"}), LayoutError);
  }
}

TEST_SUITE("linalg.singular_values") {
  TEST_CASE("identity") {
    const auto sv = singular_values(Operator::identity(3));
    REQUIRE(sv.size() == 3);
    for (double s : sv) CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("columns |0>, |+>") {
    Matrix m(2, 2);
    m.col(0) = ket0();
    m.col(1) = ket_plus();
    const auto sv = singular_values(Operator(m));
    // Oracle: eigenvalues of the Gram matrix [[1, 1/sqrt2], [1/sqrt2, 1]] are
    // 1 +- 1/sqrt2; singular values are their square roots.
    const double hi = std::sqrt(1.0 + kInvSqrt2);
    const double lo = std::sqrt(1.0 - kInvSqrt2);
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(hi).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(lo).epsilon(1e-12));
    CHECK(sv[0] == doctest::Approx(1.30656296487638).epsilon(1e-10));
    CHECK(sv[1] == doctest::Approx(0.541196100146197).epsilon(1e-10));
  }

  TEST_CASE("duplicate columns collapse to rank one") {
    Matrix m(2, 2);
    m.col(0) = ket0();
    m.col(1) = ket0();
    const auto sv = singular_values(Operator(m));
    CHECK(sv[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("spectral norm estimate agrees with exact SVD on larger matrices") {
    auto rng = make_rng(41);
    Matrix m = random_unitary(300, rng);
    m *= 2.5;  // known spectral norm
    CHECK(spectral_norm(Operator(m)) == doctest::Approx(2.5).epsilon(1e-6));
  }
}

TEST_SUITE("linalg.states") {
  TEST_CASE("constructors normalize only when needed") {
    const RegisterLayout layout{{"A", 1}};
    Vector v(2);
    v << Complex(3, 0), Complex(4, 0);
    const StateVector s(layout, v);
    CHECK(s.amps().norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.amps()[0].real() == doctest::Approx(0.6).epsilon(1e-15));

    Vector zero = Vector::Zero(2);
    CHECK_THROWS_AS(StateVector(layout, zero), LayoutError);
  }

  TEST_CASE("density matrix invariants are enforced") {
    const RegisterLayout layout{{"A", 1}};
    Matrix bad(2, 2);
    bad << Complex(0.5, 0), Complex(0.3, 0.2), Complex(0.3, -0.1), Complex(0.5, 0);
    CHECK_THROWS_AS(DensityMatrix(layout, bad), LayoutError);

    Matrix neg(2, 2);
    neg << Complex(1.5, 0), Complex(0, 0), Complex(0, 0), Complex(-0.5, 0);
    CHECK_THROWS_AS(DensityMatrix(layout, neg), LayoutError);

    const DensityMatrix ok = DensityMatrix::maximally_mixed(layout);
    CHECK(ok.mat()(0, 0).real() == doctest::Approx(0.5));
  }

  TEST_CASE("measurement marginals") {
    const RegisterLayout layout{{"A", 1}, {"B", 1}};
    Vector bell = Vector::Zero(4);
    bell[0b00] = kInvSqrt2;
    bell[0b11] = kInvSqrt2;
    const StateVector s(layout, bell);
    const auto d = measure_register(s, "A");
    CHECK(d.at("0") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.at("1") == doctest::Approx(0.5).epsilon(1e-12));
    const auto full = measure_all(s);
    CHECK(full.at("00") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(full.at("11") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(full.size() == 2);
  }
}
