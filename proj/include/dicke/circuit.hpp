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

#include <cstddef>
#include <vector>

namespace dicke {

enum class GateKind { PauliX, RotY, ControlledNot };

/// Elementary gate over 1-indexed wires q_1..q_n (q_1 is the most
/// significant bit of a basis label).
struct Gate {
  GateKind kind;
  int a;        // PauliX/RotY target; ControlledNot control
  int b;        // ControlledNot target, otherwise 0
  double theta; // RotY angle in radians, otherwise 0

  static Gate x(int target);
  static Gate ry(int target, double theta);
  static Gate cx(int control, int target);

  bool touches(int qubit) const { return a == qubit || b == qubit; }
  bool is_cx() const { return kind == GateKind::ControlledNot; }
  int max_qubit() const { return a > b ? a : b; }
};

bool operator==(const Gate& lhs, const Gate& rhs);
inline bool operator!=(const Gate& lhs, const Gate& rhs) { return !(lhs == rhs); }

/// Ordered gate sequence; leftmost gate is applied first.
class Circuit {
 public:
  explicit Circuit(int qubit_count);

  int qubit_count() const { return qubit_count_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  Circuit& append(const Gate& g);
  Circuit& x(int target) { return append(Gate::x(target)); }
  Circuit& ry(int target, double theta) { return append(Gate::ry(target, theta)); }
  Circuit& cx(int control, int target) { return append(Gate::cx(control, target)); }

  /// Appends every gate of `other` (indices must fit this circuit).
  Circuit& extend(const Circuit& other);

 private:
  int qubit_count_;
  std::vector<Gate> gates_;
};

bool operator==(const Circuit& lhs, const Circuit& rhs);
inline bool operator!=(const Circuit& lhs, const Circuit& rhs) { return !(lhs == rhs); }

struct GateCounts {
  long cnot = 0;
  long ry = 0;
  long x = 0;

  long total() const { return cnot + ry + x; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_counts(const Circuit& c);

/// Peephole pass over CNOT subsequences. Two rewrites, applied to a fixed
/// point, both exact circuit identities:
///   - a pair of identical CNOTs separated only by gates that commute with
///     it syntactically is removed;
///   - the contiguous triple CX(x,c) CX(y,c) CX(x,y) collapses to
///     CX(x,y) CX(y,c), the rearrangement that merges the closing CNOT of
///     one three-qubit split with the opening of the next.
/// The CNOT count never increases.
Circuit cancel_adjacent_cnots(const Circuit& c);

}  // namespace dicke
