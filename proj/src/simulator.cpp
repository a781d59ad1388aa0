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

#include "dicke/simulator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace dicke {

namespace {

std::uint64_t qubit_mask(int n, int qubit) { return 1ull << (n - qubit); }

void check_width(int n) {
  if (n < 1 || n > kMaxSimQubits) {
    throw std::invalid_argument("statevector width " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxSimQubits) + "]");
  }
}

#ifndef NDEBUG
void debug_check_norm(const StateVector& sv) {
  assert(std::abs(sv.norm2() - 1.0) < 1e-9 && "gate application broke normalization");
}
#endif

// Deterministic uniform double in [0,1) from a splitmix64 stream.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
};

void apply_x(StateVector& sv, int q) {
  const std::uint64_t m = qubit_mask(sv.n, q);
  const std::uint64_t dim = sv.amps.size();
  for (std::uint64_t v = 0; v < dim; ++v) {
    if (!(v & m)) std::swap(sv.amps[v], sv.amps[v | m]);
  }
}

void apply_z(StateVector& sv, int q) {
  const std::uint64_t m = qubit_mask(sv.n, q);
  const std::uint64_t dim = sv.amps.size();
  for (std::uint64_t v = 0; v < dim; ++v) {
    if (v & m) sv.amps[v] = -sv.amps[v];
  }
}

void apply_cx(StateVector& sv, int c, int t) {
  const std::uint64_t cm = qubit_mask(sv.n, c);
  const std::uint64_t tm = qubit_mask(sv.n, t);
  const std::uint64_t dim = sv.amps.size();
  for (std::uint64_t v = 0; v < dim; ++v) {
    if ((v & cm) && !(v & tm)) std::swap(sv.amps[v], sv.amps[v | tm]);
  }
}

void apply_ry(StateVector& sv, int q, double theta) {
  const std::uint64_t m = qubit_mask(sv.n, q);
  const std::uint64_t dim = sv.amps.size();
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  for (std::uint64_t v = 0; v < dim; ++v) {
    if (v & m) continue;
    const double a0 = sv.amps[v];
    const double a1 = sv.amps[v | m];
    sv.amps[v] = c * a0 - s * a1;
    sv.amps[v | m] = s * a0 + c * a1;
  }
}

std::uint64_t draw_basis_index(const StateVector& sv, Rng& rng) {
  const double r = rng.next_unit();
  double acc = 0.0;
  const std::uint64_t dim = sv.amps.size();
  for (std::uint64_t v = 0; v < dim; ++v) {
    acc += sv.amps[v] * sv.amps[v];
    if (r < acc) return v;
  }
  return dim - 1;  // numerical tail
}

std::string index_to_bits(std::uint64_t v, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) {
    if (v & (1ull << (n - 1 - i))) s[i] = '1';
  }
  return s;
}

}  // namespace

StateVector StateVector::basis(int n, std::uint64_t index) {
  check_width(n);
  const std::uint64_t dim = 1ull << n;
  if (index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  StateVector sv;
  sv.n = n;
  sv.amps.assign(dim, 0.0);
  sv.amps[index] = 1.0;
  return sv;
}

double StateVector::norm2() const {
  double s = 0.0;
  for (double a : amps) s += a * a;
  return s;
}

void apply_gate(StateVector& sv, const Gate& g) {
  switch (g.kind) {
    case GateKind::PauliX: apply_x(sv, g.a); break;
    case GateKind::RotY: apply_ry(sv, g.a, g.theta); break;
    case GateKind::ControlledNot: apply_cx(sv, g.a, g.b); break;
  }
#ifndef NDEBUG
  debug_check_norm(sv);
#endif
}

StateVector simulate(const Circuit& c, std::uint64_t initial_basis) {
  StateVector sv = StateVector::basis(c.qubit_count(), initial_basis);
  for (const Gate& g : c.gates()) apply_gate(sv, g);
  return sv;
}

int popcount64(std::uint64_t v) {
  int c = 0;
  while (v) {
    v &= v - 1;
    ++c;
  }
  return c;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

StateVector dicke_reference(int n, int k) {
  check_width(n);
  if (k < 0 || k > n) {
    throw std::invalid_argument("weight outside [0, n]");
  }
  StateVector sv;
  sv.n = n;
  sv.amps.assign(1ull << n, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
  for (std::uint64_t v = 0; v < sv.amps.size(); ++v) {
    if (popcount64(v) == k) sv.amps[v] = amp;
  }
  return sv;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("fidelity needs equal widths");
  }
  double ip = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) ip += a.amps[i] * b.amps[i];
  return ip * ip;
}

std::uint64_t measure_once(const StateVector& sv, std::uint64_t stream_seed) {
  Rng rng(stream_seed);
  return draw_basis_index(sv, rng);
}

MeasurementHistogram sample(const StateVector& sv, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("need at least one shot");
  }
  Rng rng(splitmix64(seed));
  MeasurementHistogram h;
  h.n = sv.n;
  h.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    ++h.counts[draw_basis_index(sv, rng)];
  }
  return h;
}

std::string histogram_to_json(const MeasurementHistogram& h) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [index, count] : h.counts) {
    counts[index_to_bits(index, h.n)] = count;
  }
  nlohmann::json root{{"n", h.n}, {"shots", h.shots}, {"counts", counts}};
  return root.dump(2) + "\n";
}

MeasurementHistogram histogram_from_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text);
  MeasurementHistogram h;
  h.n = root.at("n").get<int>();
  h.shots = root.at("shots").get<std::uint64_t>();
  std::uint64_t total = 0;
  for (const auto& [bits, count] : root.at("counts").items()) {
    if (static_cast<int>(bits.size()) != h.n) {
      throw std::invalid_argument("bitstring '" + bits + "' does not have n bits");
    }
    std::uint64_t v = 0;
    for (char ch : bits) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("bitstring '" + bits + "' is not binary");
      }
      v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    h.counts[v] = count.get<std::uint64_t>();
    total += h.counts[v];
  }
  if (total != h.shots) {
    throw std::invalid_argument("histogram counts do not sum to shots");
  }
  return h;
}

FaultModel FaultModel::zero(const Circuit& c) {
  return uniform(c, 0.0);
}

FaultModel FaultModel::uniform(const Circuit& c, double p, FaultAction action) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("fault probability outside [0,1]");
  }
  FaultModel fm;
  fm.action = action;
  fm.cnot_fault_prob.assign(static_cast<std::size_t>(gate_counts(c).cnot), p);
  return fm;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index) {
  return splitmix64(master + (trial_index + 1) * 0x9E3779B97F4A7C15ull);
}

namespace {

// Applies one of the 15 non-identity pairs over {I, X, Z, XZ} on the two
// wires. Y enters as XZ; the dropped global phase cannot affect outcome
// statistics.
void apply_pauli_pair(StateVector& sv, int wire_a, int wire_b, std::uint64_t choice) {
  const std::uint64_t idx = choice + 1;  // 1..15
  const int pa = static_cast<int>(idx / 4);
  const int pb = static_cast<int>(idx % 4);
  auto apply_one = [&sv](int wire, int p) {
    switch (p) {
      case 0: break;
      case 1: apply_x(sv, wire); break;
      case 2: apply_z(sv, wire); break;
      case 3: apply_z(sv, wire); apply_x(sv, wire); break;
      default: break;
    }
  };
  apply_one(wire_a, pa);
  apply_one(wire_b, pb);
}

struct TrialOutcome {
  int faults = 0;
  std::uint64_t measured = 0;
};

TrialOutcome run_trial(const Circuit& c, const FaultModel& fm, std::uint64_t seed) {
  Rng rng(seed);
  StateVector sv = StateVector::basis(c.qubit_count(), 0);
  TrialOutcome out;
  std::size_t cnot_index = 0;
  for (const Gate& g : c.gates()) {
    apply_gate(sv, g);
    if (!g.is_cx()) continue;
    const double p = fm.cnot_fault_prob.at(cnot_index++);
    if (p > 0.0 && rng.next_unit() < p) {
      ++out.faults;
      if (fm.action == FaultAction::BitFlipBoth) {
        apply_x(sv, g.a);
        apply_x(sv, g.b);
      } else {
        apply_pauli_pair(sv, g.a, g.b, rng.next_u64() % 15);
      }
    }
  }
  out.measured = draw_basis_index(sv, rng);
  return out;
}

}  // namespace

MonteCarloResult fault_monte_carlo(const Circuit& c, const FaultModel& fm,
                                   std::uint64_t trials, std::uint64_t seed, int threads) {
  if (trials < 1) {
    throw std::invalid_argument("need at least one trial");
  }
  if (fm.cnot_fault_prob.size() != static_cast<std::size_t>(gate_counts(c).cnot)) {
    throw std::invalid_argument("fault model covers " +
                                std::to_string(fm.cnot_fault_prob.size()) +
                                " CNOTs, circuit has " +
                                std::to_string(gate_counts(c).cnot));
  }
  for (double p : fm.cnot_fault_prob) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("fault probability outside [0,1]");
    }
  }

  const int nthreads = std::max(1, std::min<int>(threads, 64));
  std::vector<std::uint64_t> fault_totals(nthreads, 0);
  std::vector<std::map<std::uint64_t, std::uint64_t>> pools(nthreads);

  auto worker = [&](int tid) {
    for (std::uint64_t i = tid; i < trials; i += nthreads) {
      TrialOutcome out = run_trial(c, fm, trial_seed(seed, i));
      fault_totals[tid] += out.faults;
      ++pools[tid][out.measured];
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  MonteCarloResult result;
  result.trials = trials;
  result.pooled.n = c.qubit_count();
  result.pooled.shots = trials;
  std::uint64_t faults = 0;
  for (int t = 0; t < nthreads; ++t) {
    faults += fault_totals[t];
    for (const auto& [v, cnt] : pools[t]) result.pooled.counts[v] += cnt;
  }
  result.mean_faulty_cnots = static_cast<double>(faults) / static_cast<double>(trials);
  return result;
}

}  // namespace dicke
