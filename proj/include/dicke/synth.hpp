// Copyright 2026 The dickeprep authors
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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dicke/circuit.hpp"

namespace dicke {

/// 2x2 complex matrix, row major.
struct Mat2 {
  std::complex<double> m00, m01, m10, m11;

  std::complex<double> trace() const { return m00 + m11; }
  std::complex<double> det() const { return m00 * m11 - m01 * m10; }
  Mat2 mul(const Mat2& rhs) const;
  Mat2 dagger() const;
  /// Frobenius norm of U U^dagger - I.
  double unitarity_defect() const;
  double distance(const Mat2& rhs) const;

  static Mat2 identity();
  static Mat2 pauli_x();
  static Mat2 pauli_z();
};

Mat2 ry_matrix(double theta);
/// U(alpha) = [[sin a/2, cos a/2], [cos a/2, -sin a/2]].
Mat2 u_alpha(double alpha);

/// Dense real square matrix (the gate set is real, so the oracle is too).
struct DMat {
  int dim = 0;
  std::vector<double> a;  // row major

  static DMat identity(int dim);
  double& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  double at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
  double max_abs_diff(const DMat& rhs) const;
  std::vector<double> column(int c) const;
};

constexpr int kMaxFragmentQubits = 6;

/// Exact matrix of a fragment on `qubit_count` qubits, leftmost gate applied
/// first. Independent of the statevector simulator; the two are cross-checked
/// in the tests.
DMat fragment_unitary(const Circuit& fragment, int qubit_count);

/// CRy(theta) as CX, Ry(-theta/2), CX, Ry(+theta/2): 2 CNOT + 2 Ry.
Circuit decompose_cry(double theta, int ctrl, int targ);

/// The three-gate controlled-U(alpha): Ry(+alpha/2), CX, Ry(-alpha/2) on the
/// target. With alpha = pi - theta it agrees with CRy(theta) on the subspace
/// where the transformation is defined and differs on |11>.
Circuit u0_sequence(double alpha, int ctrl, int targ);

/// Doubly controlled Ry as the 4-CNOT, 4-Ry ladder
/// Ry(t/4) CX(c1) Ry(-t/4) CX(c2) Ry(t/4) CX(c1) Ry(-t/4) CX(c2).
Circuit decompose_ccry(double theta, int c1, int c2, int targ);

enum class CostClass { AtMostTwo, Three, Four };

struct UnclassifiableError : std::runtime_error {
  explicit UnclassifiableError(const std::string& what) : std::runtime_error(what) {}
};

/// Minimal elementary-gate cost of the controlled gate CU:
///   AtMostTwo  if U is e^{i phi} I, X or Z;
///   Three      if tr U = 0, det U = -1 (and U is not a phase of X);
///   Four       if tr(UX) = 0, tr U != 0, det U = 1, U != +-I.
/// Matrices matching none of the cases raise UnclassifiableError; the
/// classification rules are not exhaustive over all unitaries.
CostClass classify_controlled_cost(const Mat2& u, double tol = 1e-9);

/// The completion of the two-qubit transformation defined on |00>, |10>, |01>
/// that costs three elementary gates: U(pi - theta). Valid for 0 < theta < pi.
Mat2 complete_t1(double theta);

/// Largest |entry| that a unitary completion of the partially defined
/// two-qubit transformation can place in the rows forcing a = c = 0.
/// Zero (numerically) for every theta in (0, pi): any completion is a
/// controlled gate.
double t1_completion_freedom(double theta);

/// Partially defined transformation: input basis labels with their target
/// statevectors. Consistency requires distinct inputs, unit-norm outputs and
/// output inner products equal to input inner products.
struct PartialSpec {
  int qubit_count = 0;
  struct Entry {
    std::uint64_t input;
    std::vector<double> output;
  };
  std::vector<Entry> entries;

  void validate(double tol = 1e-9) const;
  bool is_consistent(double tol = 1e-9) const;

  static PartialSpec t1(double theta);
  /// The two-CNOT transformation following the first rotation of the reduced
  /// 4-qubit builder, defined on two basis states only.
  static PartialSpec t4();
  /// Same outputs reached from the shifted start states |0010>, |0110>.
  static PartialSpec t4_shifted();
};

}  // namespace dicke
