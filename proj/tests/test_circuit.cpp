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

#include <cstdint>
#include <random>

#include "doctest.h"

#include "dicke/circuit.hpp"
#include "dicke/circuit_io.hpp"
#include "dicke/dicke_builder.hpp"
#include "dicke/simulator.hpp"

using namespace dicke;

namespace {

// Statevector equality over every computational-basis input.
bool same_action(const Circuit& a, const Circuit& b, double tol = 1e-12) {
  REQUIRE(a.qubit_count() == b.qubit_count());
  const std::uint64_t dim = 1ull << a.qubit_count();
  for (std::uint64_t v = 0; v < dim; ++v) {
    const StateVector sa = simulate(a, v);
    const StateVector sb = simulate(b, v);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (std::abs(sa.amps[i] - sb.amps[i]) > tol) return false;
    }
  }
  return true;
}

Circuit random_circuit(int n, int gates, std::mt19937_64& rng) {
  Circuit c(n);
  std::uniform_int_distribution<int> qubit(1, n);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int i = 0; i < gates; ++i) {
    switch (kind(rng)) {
      case 0: c.x(qubit(rng)); break;
      case 1: c.ry(qubit(rng), angle(rng)); break;
      default: {
        int a = qubit(rng), b = qubit(rng);
        while (b == a) b = qubit(rng);
        c.cx(a, b);
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("gate validation") {
  CHECK_THROWS_AS(Gate::x(0), std::invalid_argument);
  CHECK_THROWS_AS(Gate::cx(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::ry(1, std::numeric_limits<double>::infinity()), std::invalid_argument);
  Circuit c(2);
  CHECK_THROWS_AS(c.x(3), std::invalid_argument);
}

TEST_CASE("gate_counts tallies by kind") {
  SUBCASE("empty circuit") {
    CHECK(gate_counts(Circuit(1)) == GateCounts{0, 0, 0});
  }
  SUBCASE("optimized 4,2") {
    const DickeParams p(4, 2);
    const GateCounts counts = gate_counts(build_optimized(p, VariantMask::zeros(p)));
    CHECK(counts == GateCounts{12, 9, 2});
  }
  SUBCASE("optimized 6,3") {
    const DickeParams p(6, 3);
    const GateCounts counts = gate_counts(build_optimized(p, VariantMask::zeros(p)));
    CHECK(counts == GateCounts{33, 25, 3});
  }
  SUBCASE("count sum equals length") {
    std::mt19937_64 rng(7);
    const Circuit c = random_circuit(4, 60, rng);
    CHECK(gate_counts(c).total() == static_cast<long>(c.size()));
  }
}

TEST_CASE("cancel_adjacent_cnots removes self-inverse pairs") {
  SUBCASE("adjacent pair") {
    Circuit c(2);
    c.cx(1, 2).cx(1, 2);
    CHECK(cancel_adjacent_cnots(c).size() == 0);
  }
  SUBCASE("commuting spectator survives") {
    Circuit c(3);
    c.cx(1, 2).ry(3, 0.7).cx(1, 2);
    const Circuit reduced = cancel_adjacent_cnots(c);
    REQUIRE(reduced.size() == 1);
    CHECK(reduced.gates()[0] == Gate::ry(3, 0.7));
  }
  SUBCASE("X on the control blocks cancellation") {
    Circuit c(2);
    c.cx(1, 2).x(1).cx(1, 2);
    CHECK(cancel_adjacent_cnots(c).size() == 3);
  }
  SUBCASE("Ry on the target blocks cancellation") {
    Circuit c(2);
    c.cx(1, 2).ry(2, 0.3).cx(1, 2);
    CHECK(cancel_adjacent_cnots(c).size() == 3);
  }
}

TEST_CASE("cancel_adjacent_cnots reduces the naive three-qubit split pair") {
  // Uncanceled builds carry 6 CNOTs per three-qubit split; the pass must
  // recover the canonical counts without changing the action.
  const DickeParams p(4, 2);
  BuildOptions naive;
  naive.naive = true;
  const Circuit raw = build_baseline(p, true);
  const Circuit reduced = cancel_adjacent_cnots(raw);
  CHECK(gate_counts(raw).cnot == 24);
  CHECK(gate_counts(reduced).cnot == 22);
  CHECK(same_action(raw, reduced));

  const Circuit raw_opt = build_optimized(p, VariantMask::zeros(p), naive);
  const Circuit reduced_opt = cancel_adjacent_cnots(raw_opt);
  CHECK(gate_counts(reduced_opt).cnot == 12);
  CHECK(same_action(raw_opt, reduced_opt));
  // The merged junction is exactly the all-ones variant's placement.
  CHECK(reduced_opt == build_optimized(p, VariantMask::ones(p)));

  // Same story at six qubits, checked over all 64 basis inputs.
  const DickeParams p63(6, 3);
  const Circuit raw63 = build_optimized(p63, VariantMask::zeros(p63), naive);
  const Circuit reduced63 = cancel_adjacent_cnots(raw63);
  CHECK(gate_counts(reduced63).cnot == 33);
  CHECK(same_action(raw63, reduced63, 1e-11));
  CHECK(reduced63 == build_optimized(p63, VariantMask::ones(p63)));
}

TEST_CASE("cancel_adjacent_cnots never increases CNOT count and preserves action") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Circuit c = random_circuit(n, 24, rng);
    const Circuit reduced = cancel_adjacent_cnots(c);
    CHECK(gate_counts(reduced).cnot <= gate_counts(c).cnot);
    CHECK(same_action(c, reduced));
  }
}

TEST_CASE("circuit JSON round trip") {
  const DickeParams p(4, 2);
  const Circuit c = build_optimized(p, VariantMask::zeros(p));
  const Circuit back = circuit_from_json(circuit_to_json(c));
  CHECK(back == c);
  // Determinism of the serialized text.
  CHECK(circuit_to_json(back) == circuit_to_json(c));
}

TEST_CASE("circuit JSON error paths") {
  SUBCASE("malformed text carries line and column") {
    try {
      circuit_from_json("{\n  \"n\": 2,\n  \"gates\": [ %\n}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(e.column > 0);
    }
  }
  SUBCASE("unknown gate kind") {
    CHECK_THROWS_AS(circuit_from_json(R"({"n":2,"gates":[{"g":"h","q":1}]})"), ParseError);
  }
  SUBCASE("index zero violates 1-indexing") {
    CHECK_THROWS_AS(circuit_from_json(R"({"n":2,"gates":[{"g":"x","q":0}]})"), ParseError);
  }
  SUBCASE("index beyond width") {
    CHECK_THROWS_AS(circuit_from_json(R"({"n":2,"gates":[{"g":"x","q":3}]})"), ParseError);
  }
  SUBCASE("cx with equal wires") {
    CHECK_THROWS_AS(circuit_from_json(R"({"n":2,"gates":[{"g":"cx","c":1,"t":1}]})"), ParseError);
  }
}

TEST_CASE("QASM export uses zero-indexed wires") {
  Circuit c(3);
  c.x(1).ry(2, 1.5).cx(2, 3);
  const std::string qasm = circuit_to_qasm(c, true);
  CHECK(qasm.find("OPENQASM 2.0;") == 0);
  CHECK(qasm.find("include \"qelib1.inc\";") != std::string::npos);
  CHECK(qasm.find("qreg q[3];") != std::string::npos);
  CHECK(qasm.find("x q[0];") != std::string::npos);
  CHECK(qasm.find("ry(1.5) q[1];") != std::string::npos);
  CHECK(qasm.find("cx q[1],q[2];") != std::string::npos);
  CHECK(qasm.find("measure q -> c;") != std::string::npos);
}
