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

#include "dicke/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dicke {

namespace {

void require_positive_index(int q, const char* what) {
  if (q < 1) {
    throw std::invalid_argument(std::string(what) + " qubit index must be >= 1, got " +
                                std::to_string(q));
  }
}

}  // namespace

Gate Gate::x(int target) {
  require_positive_index(target, "X");
  return Gate{GateKind::PauliX, target, 0, 0.0};
}

Gate Gate::ry(int target, double theta) {
  require_positive_index(target, "Ry");
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("Ry angle must be finite");
  }
  return Gate{GateKind::RotY, target, 0, theta};
}

Gate Gate::cx(int control, int target) {
  require_positive_index(control, "CX control");
  require_positive_index(target, "CX target");
  if (control == target) {
    throw std::invalid_argument("CX control and target must differ, both are " +
                                std::to_string(control));
  }
  return Gate{GateKind::ControlledNot, control, target, 0.0};
}

bool operator==(const Gate& lhs, const Gate& rhs) {
  return lhs.kind == rhs.kind && lhs.a == rhs.a && lhs.b == rhs.b && lhs.theta == rhs.theta;
}

Circuit::Circuit(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

Circuit& Circuit::append(const Gate& g) {
  if (g.max_qubit() > qubit_count_) {
    throw std::invalid_argument("gate touches qubit " + std::to_string(g.max_qubit()) +
                                " beyond circuit width " + std::to_string(qubit_count_));
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
  for (const Gate& g : other.gates()) append(g);
  return *this;
}

bool operator==(const Circuit& lhs, const Circuit& rhs) {
  return lhs.qubit_count() == rhs.qubit_count() && lhs.gates() == rhs.gates();
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts out;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::ControlledNot: ++out.cnot; break;
      case GateKind::RotY: ++out.ry; break;
      case GateKind::PauliX: ++out.x; break;
    }
  }
  return out;
}

namespace {

// Syntactic commutation with CX(a,b). Conservative and sound: disjoint
// support, the identical CNOT, a CNOT sharing exactly one of control/target
// in the same role, or an X on the target wire.
bool commutes_with_cx(const Gate& h, int a, int b) {
  if (!h.touches(a) && !h.touches(b)) return true;
  if (h.kind == GateKind::ControlledNot) {
    if (h.a == a && h.b == b) return true;
    if (h.a == a && h.b != b && h.b != a) return true;
    if (h.b == b && h.a != a && h.a != b) return true;
    return false;
  }
  if (h.kind == GateKind::PauliX && h.a == b) return true;
  return false;
}

bool cancel_pair_once(std::vector<Gate>& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (!gs[i].is_cx()) continue;
    const int a = gs[i].a, b = gs[i].b;
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[j] == gs[i]) {
        gs.erase(gs.begin() + j);
        gs.erase(gs.begin() + i);
        return true;
      }
      if (!commutes_with_cx(gs[j], a, b)) break;
    }
  }
  return false;
}

bool rearrange_triple_once(std::vector<Gate>& gs) {
  for (std::size_t i = 0; i + 2 < gs.size(); ++i) {
    const Gate& g0 = gs[i];
    const Gate& g1 = gs[i + 1];
    const Gate& g2 = gs[i + 2];
    if (!g0.is_cx() || !g1.is_cx() || !g2.is_cx()) continue;
    const int x = g0.a, c = g0.b;
    if (g1.b != c || g1.a == x) continue;
    const int y = g1.a;
    if (g2.a != x || g2.b != y) continue;
    // CX(x,c) CX(y,c) CX(x,y)  ->  CX(x,y) CX(y,c)
    gs[i] = Gate::cx(x, y);
    gs[i + 1] = Gate::cx(y, c);
    gs.erase(gs.begin() + i + 2);
    return true;
  }
  return false;
}

}  // namespace

Circuit cancel_adjacent_cnots(const Circuit& c) {
  std::vector<Gate> gs = c.gates();
  bool changed = true;
  while (changed) {
    changed = false;
    while (cancel_pair_once(gs)) changed = true;
    while (rearrange_triple_once(gs)) changed = true;
  }
  Circuit out(c.qubit_count());
  for (const Gate& g : gs) out.append(g);
  return out;
}

}  // namespace dicke
