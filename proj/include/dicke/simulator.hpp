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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dicke/circuit.hpp"

namespace dicke {

/// Dense real statevector. amps[v] is the amplitude of |v_2>, where
/// v = sum b_i 2^(n-i), i.e. q_1 is the most significant bit.
/// Every gate in the IR (X, Ry, CNOT) is real, so real amplitudes suffice.
struct StateVector {
  int n = 0;
  std::vector<double> amps;

  static StateVector basis(int n, std::uint64_t index);
  double norm2() const;
};

constexpr int kMaxSimQubits = 20;

void apply_gate(StateVector& sv, const Gate& g);

StateVector simulate(const Circuit& c, std::uint64_t initial_basis = 0);

/// Amplitude 1/sqrt(C(n,k)) on every weight-k basis label, 0 elsewhere.
StateVector dicke_reference(int n, int k);

/// Squared inner product.
double fidelity(const StateVector& a, const StateVector& b);

std::uint64_t binomial(int n, int k);
int popcount64(std::uint64_t v);

struct MeasurementHistogram {
  int n = 0;
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // basis index -> count
};

/// Multinomial draw from amps^2; deterministic given the seed (the RNG
/// mapping to [0,1) is spelled out in the implementation, not delegated to
/// distribution objects).
MeasurementHistogram sample(const StateVector& sv, std::uint64_t shots, std::uint64_t seed);

/// First inverse-CDF draw of the stream seeded with `stream_seed`; exactly
/// the measurement a zero-fault Monte-Carlo trial with that stream performs.
std::uint64_t measure_once(const StateVector& sv, std::uint64_t stream_seed);

/// Histogram JSON: {"n":int,"shots":int,"counts":{"<bitstring>":int}} with
/// bitstrings written q_1..q_n left to right.
std::string histogram_to_json(const MeasurementHistogram& h);
MeasurementHistogram histogram_from_json(const std::string& text);

enum class FaultAction { DepolarizingPair, BitFlipBoth };

/// Per-CNOT Bernoulli fault probabilities, in gate order over the circuit's
/// CNOTs. The mean number of faulted CNOTs is the contractual output of the
/// Monte-Carlo run; the fault channel itself only shapes the noisy samples.
struct FaultModel {
  std::vector<double> cnot_fault_prob;
  FaultAction action = FaultAction::DepolarizingPair;

  static FaultModel zero(const Circuit& c);
  static FaultModel uniform(const Circuit& c, double p,
                            FaultAction action = FaultAction::DepolarizingPair);
};

struct MonteCarloResult {
  double mean_faulty_cnots = 0.0;
  std::uint64_t trials = 0;
  MeasurementHistogram pooled;  // one measured shot per trial
};

/// Per trial: every CNOT faults independently with its probability; a fault
/// applies the model's action to the two wires right after the gate; one
/// shot is then measured into the pooled histogram.
///
/// Seed discipline: trial i uses the self-contained stream seeded with
/// splitmix64(seed + (i+1) * 0x9E3779B97F4A7C15). A CNOT with probability 0
/// consumes no randomness, so the zero-fault model reproduces noiseless
/// per-trial sampling bit for bit. Results are independent of `threads`.
MonteCarloResult fault_monte_carlo(const Circuit& c, const FaultModel& fm,
                                   std::uint64_t trials, std::uint64_t seed,
                                   int threads = 1);

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index);

}  // namespace dicke
