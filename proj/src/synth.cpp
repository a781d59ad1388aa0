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

#include "dicke/synth.hpp"

#include <algorithm>
#include <cmath>

namespace dicke {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_distinct(std::initializer_list<int> qubits) {
  std::vector<int> v(qubits);
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::invalid_argument("qubit indices must be distinct");
  }
}

double abs2(std::complex<double> z) { return std::norm(z); }

}  // namespace

Mat2 Mat2::mul(const Mat2& rhs) const {
  return Mat2{m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
              m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
}

Mat2 Mat2::dagger() const {
  return Mat2{std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

double Mat2::unitarity_defect() const {
  Mat2 p = mul(dagger());
  p.m00 -= 1.0;
  p.m11 -= 1.0;
  return std::sqrt(abs2(p.m00) + abs2(p.m01) + abs2(p.m10) + abs2(p.m11));
}

double Mat2::distance(const Mat2& rhs) const {
  return std::sqrt(abs2(m00 - rhs.m00) + abs2(m01 - rhs.m01) + abs2(m10 - rhs.m10) +
                   abs2(m11 - rhs.m11));
}

Mat2 Mat2::identity() { return Mat2{1, 0, 0, 1}; }
Mat2 Mat2::pauli_x() { return Mat2{0, 1, 1, 0}; }
Mat2 Mat2::pauli_z() { return Mat2{1, 0, 0, -1}; }

Mat2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return Mat2{c, -s, s, c};
}

Mat2 u_alpha(double alpha) {
  const double c = std::cos(alpha / 2.0);
  const double s = std::sin(alpha / 2.0);
  return Mat2{s, c, c, -s};
}

DMat DMat::identity(int dim) {
  DMat m;
  m.dim = dim;
  m.a.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

double DMat::max_abs_diff(const DMat& rhs) const {
  if (dim != rhs.dim) {
    throw std::invalid_argument("matrix dimensions differ");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - rhs.a[i]));
  return d;
}

std::vector<double> DMat::column(int c) const {
  std::vector<double> out(dim);
  for (int r = 0; r < dim; ++r) out[r] = at(r, c);
  return out;
}

namespace {

// In-place gate application on every column of the accumulated product.
// Bit of q_i in a row index r is (r >> (n - i)) & 1.
void left_apply(DMat& u, const Gate& g, int n) {
  const int dim = u.dim;
  switch (g.kind) {
    case GateKind::PauliX: {
      const int m = 1 << (n - g.a);
      for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
          if (!(r & m)) std::swap(u.at(r, c), u.at(r | m, c));
        }
      }
      break;
    }
    case GateKind::ControlledNot: {
      const int cm = 1 << (n - g.a);
      const int tm = 1 << (n - g.b);
      for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
          if ((r & cm) && !(r & tm)) std::swap(u.at(r, c), u.at(r | tm, c));
        }
      }
      break;
    }
    case GateKind::RotY: {
      const int m = 1 << (n - g.a);
      const double co = std::cos(g.theta / 2.0);
      const double si = std::sin(g.theta / 2.0);
      for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
          if (r & m) continue;
          const double a0 = u.at(r, c);
          const double a1 = u.at(r | m, c);
          u.at(r, c) = co * a0 - si * a1;
          u.at(r | m, c) = si * a0 + co * a1;
        }
      }
      break;
    }
  }
}

}  // namespace

DMat fragment_unitary(const Circuit& fragment, int qubit_count) {
  if (qubit_count < 1 || qubit_count > kMaxFragmentQubits) {
    throw std::invalid_argument("fragment oracle limited to " +
                                std::to_string(kMaxFragmentQubits) + " qubits");
  }
  if (fragment.qubit_count() > qubit_count) {
    throw std::invalid_argument("fragment touches more qubits than requested width");
  }
  DMat u = DMat::identity(1 << qubit_count);
  for (const Gate& g : fragment.gates()) left_apply(u, g, qubit_count);
  return u;
}

Circuit decompose_cry(double theta, int ctrl, int targ) {
  require_distinct({ctrl, targ});
  Circuit c(std::max(ctrl, targ));
  c.cx(ctrl, targ);
  c.ry(targ, -theta / 2.0);
  c.cx(ctrl, targ);
  c.ry(targ, theta / 2.0);
  return c;
}

Circuit u0_sequence(double alpha, int ctrl, int targ) {
  require_distinct({ctrl, targ});
  Circuit c(std::max(ctrl, targ));
  c.ry(targ, alpha / 2.0);
  c.cx(ctrl, targ);
  c.ry(targ, -alpha / 2.0);
  return c;
}

Circuit decompose_ccry(double theta, int c1, int c2, int targ) {
  require_distinct({c1, c2, targ});
  Circuit c(std::max({c1, c2, targ}));
  c.ry(targ, theta / 4.0);
  c.cx(c1, targ);
  c.ry(targ, -theta / 4.0);
  c.cx(c2, targ);
  c.ry(targ, theta / 4.0);
  c.cx(c1, targ);
  c.ry(targ, -theta / 4.0);
  c.cx(c2, targ);
  return c;
}

CostClass classify_controlled_cost(const Mat2& u, double tol) {
  if (u.unitarity_defect() > 1e-10) {
    throw std::invalid_argument("matrix is not unitary within 1e-10");
  }
  // Phase multiples of I, X, Z: fewer than three gates suffice. Checked
  // first because +-Z also meets the trace/determinant conditions below.
  const bool off_diag_zero = std::abs(u.m01) <= tol && std::abs(u.m10) <= tol;
  if (off_diag_zero && std::abs(u.m00 - u.m11) <= tol) return CostClass::AtMostTwo;
  if (off_diag_zero && std::abs(u.m00 + u.m11) <= tol) return CostClass::AtMostTwo;
  const bool diag_zero = std::abs(u.m00) <= tol && std::abs(u.m11) <= tol;
  if (diag_zero && std::abs(u.m01 - u.m10) <= tol) return CostClass::AtMostTwo;

  if (std::abs(u.trace()) <= tol && std::abs(u.det() + 1.0) <= tol) {
    return CostClass::Three;
  }

  const std::complex<double> trace_ux = u.mul(Mat2::pauli_x()).trace();
  if (std::abs(trace_ux) <= tol && std::abs(u.trace()) > tol &&
      std::abs(u.det() - 1.0) <= tol) {
    return CostClass::Four;
  }
  throw UnclassifiableError("matrix falls outside the three classified cases");
}

Mat2 complete_t1(double theta) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw std::invalid_argument("completion argument requires 0 < theta < pi");
  }
  return u_alpha(kPi - theta);
}

double t1_completion_freedom(double theta) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw std::invalid_argument("completion argument requires 0 < theta < pi");
  }
  // Defined columns of the 4x4 completion, inputs |00>, |01>, |10>.
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  std::vector<std::vector<double>> cols = {
      {1, 0, 0, 0}, {0, c, 0, s}, {0, 0, 1, 0}};
  // The free column spans the orthogonal complement; Gram-Schmidt the
  // canonical basis against the defined columns and keep the residual.
  std::vector<double> best(4, 0.0);
  double best_norm = -1.0;
  for (int seed = 0; seed < 4; ++seed) {
    std::vector<double> v(4, 0.0);
    v[seed] = 1.0;
    for (const auto& col : cols) {
      double ip = 0.0;
      for (int i = 0; i < 4; ++i) ip += v[i] * col[i];
      for (int i = 0; i < 4; ++i) v[i] -= ip * col[i];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > best_norm) {
      best_norm = norm;
      best = v;
    }
  }
  const double scale = std::sqrt(best_norm);
  // Rows 0 and 2 of the free column are the off-control entries; unitarity
  // forces both to vanish, making every completion a controlled gate.
  return std::max(std::abs(best[0]), std::abs(best[2])) / scale;
}

void PartialSpec::validate(double tol) const {
  const std::size_t dim = 1ull << qubit_count;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (e.input >= dim) {
      throw std::invalid_argument("input label out of range");
    }
    if (e.output.size() != dim) {
      throw std::invalid_argument("output statevector has wrong dimension");
    }
    double norm = 0.0;
    for (double x : e.output) norm += x * x;
    if (std::abs(norm - 1.0) > tol) {
      throw std::invalid_argument("output statevector is not unit norm");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[j].input == e.input) {
        throw std::invalid_argument("duplicate input label");
      }
      double ip = 0.0;
      for (std::size_t v = 0; v < dim; ++v) ip += entries[j].output[v] * e.output[v];
      // Distinct basis inputs are orthogonal, so outputs must be too.
      if (std::abs(ip) > tol) {
        throw std::invalid_argument("outputs of orthogonal inputs are not orthogonal");
      }
    }
  }
}

bool PartialSpec::is_consistent(double tol) const {
  try {
    validate(tol);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

PartialSpec PartialSpec::t1(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  PartialSpec spec;
  spec.qubit_count = 2;
  spec.entries = {
      {0b00, {1, 0, 0, 0}},
      {0b10, {0, 0, 1, 0}},
      {0b01, {0, c, 0, s}},
  };
  return spec;
}

PartialSpec PartialSpec::t4() {
  PartialSpec spec;
  spec.qubit_count = 4;
  std::vector<double> out_a(16, 0.0), out_b(16, 0.0);
  out_a[0b0011] = 1.0;
  out_b[0b0100] = 1.0;
  spec.entries = {{0b0011, out_a}, {0b0111, out_b}};
  return spec;
}

PartialSpec PartialSpec::t4_shifted() {
  PartialSpec spec;
  spec.qubit_count = 4;
  std::vector<double> out_a(16, 0.0), out_b(16, 0.0);
  out_a[0b0011] = 1.0;
  out_b[0b0100] = 1.0;
  spec.entries = {{0b0010, out_a}, {0b0110, out_b}};
  return spec;
}

}  // namespace dicke
