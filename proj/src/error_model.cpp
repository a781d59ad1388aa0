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

#include "dicke/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace dicke {

ResponseFunction ResponseFunction::identity() { return ResponseFunction(); }

ResponseFunction ResponseFunction::affine(double slope, double offset) {
  if (slope < 0.0) {
    throw std::invalid_argument("affine response must be nondecreasing");
  }
  if (offset < 0.0 || slope + offset > 1.0) {
    throw std::invalid_argument("affine response must map [0,1] into [0,1]");
  }
  ResponseFunction f;
  f.kind_ = Kind::Affine;
  f.slope_ = slope;
  f.offset_ = offset;
  f.description_ = "affine(" + std::to_string(slope) + "," + std::to_string(offset) + ")";
  return f;
}

ResponseFunction ResponseFunction::tabulated(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("tabulated response needs at least two breakpoints");
  }
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& [x, y] = points[i];
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
      throw std::invalid_argument("tabulated breakpoints must lie in [0,1]x[0,1]");
    }
    if (i > 0 && points[i - 1].second > y) {
      throw std::invalid_argument("tabulated response must be nondecreasing");
    }
    if (i > 0 && points[i - 1].first == x) {
      throw std::invalid_argument("tabulated breakpoints must have distinct abscissae");
    }
  }
  ResponseFunction f;
  f.kind_ = Kind::Tabulated;
  f.points_ = std::move(points);
  f.description_ = "tabulated(" + std::to_string(f.points_.size()) + " points)";
  return f;
}

double ResponseFunction::operator()(double e) const {
  if (e < 0.0 || e > 1.0) {
    throw std::invalid_argument("error rate outside [0,1]");
  }
  switch (kind_) {
    case Kind::Identity:
      return e;
    case Kind::Affine:
      return slope_ * e + offset_;
    case Kind::Tabulated: {
      if (e <= points_.front().first) return points_.front().second;
      for (std::size_t i = 1; i < points_.size(); ++i) {
        if (e <= points_[i].first) {
          const auto& [x0, y0] = points_[i - 1];
          const auto& [x1, y1] = points_[i];
          return y0 + (y1 - y0) * (e - x0) / (x1 - x0);
        }
      }
      return points_.back().second;
    }
  }
  return e;
}

double em_measure(const MeasurementHistogram& h, int n, int w) {
  if (h.n != n) {
    throw std::invalid_argument("histogram width does not match n");
  }
  if (h.shots == 0) {
    throw std::invalid_argument("histogram has zero shots");
  }
  const std::uint64_t combos = binomial(n, w);
  const std::uint64_t shots = h.shots;
  // EM = 1/2 ( sum_{wt=w} |c_j/S - 1/C| + sum_{wt!=w} c_j/S )
  //    = ( sum_{wt=w} |C c_j - S| + C * sum_{wt!=w} c_j ) / (2 S C),
  // evaluated in integers until the final division.
  std::uint64_t numerator = 0;
  std::uint64_t seen_ideal = 0;
  std::uint64_t wrong_weight = 0;
  for (const auto& [index, count] : h.counts) {
    if (index >= (1ull << n)) {
      throw std::invalid_argument("histogram index outside the n-qubit basis");
    }
    if (popcount64(index) == w) {
      const std::uint64_t scaled = combos * count;
      numerator += scaled > shots ? scaled - shots : shots - scaled;
      ++seen_ideal;
    } else {
      wrong_weight += count;
    }
  }
  numerator += (combos - seen_ideal) * shots;  // absent ideal outcomes
  numerator += combos * wrong_weight;
  return static_cast<double>(numerator) /
         (2.0 * static_cast<double>(shots) * static_cast<double>(combos));
}

ExpectedError expected_cnot_error(const CnotMap& weighted_map, const Assignment& assignment,
                                  const Architecture& arch, const ResponseFunction& f) {
  ExpectedError out;
  for (const auto& [pair, w] : weighted_map.weight) {
    auto a = assignment.find(pair.first);
    auto b = assignment.find(pair.second);
    if (a == assignment.end() || b == assignment.end()) {
      throw std::invalid_argument("assignment misses logical qubit of a weighted pair");
    }
    if (!arch.has_edge(a->second, b->second)) {
      throw std::invalid_argument("weighted pair (" + std::to_string(pair.first) + "," +
                                  std::to_string(pair.second) +
                                  ") lands outside the coupling graph");
    }
    const double rate = arch.error(a->second, b->second);
    const double term = static_cast<double>(w) * f(rate);
    out.contributions.push_back({pair, w, rate, term});
    out.value += term;
  }
  return out;
}

Selection select_best(const DickeParams& p, const Architecture& arch,
                      const ResponseFunction& f) {
  Selection best;
  for (const VariantMask& mask : enumerate_variants(p)) {
    for (const bool shift : {false, true}) {
      BuildOptions options;
      options.entry_shift = shift;
      const Circuit c = build_optimized(p, mask, options);
      const CnotMap wm = extract_map(c);
      for (const Assignment& asg : find_mappings(wm, arch)) {
        const ExpectedError err = expected_cnot_error(wm, asg, arch, f);
        if (!best.feasible) {
          best = Selection{true, mask, shift, asg, err, 1};
          continue;
        }
        if (err.value < best.error.value) {
          best = Selection{true, mask, shift, asg, err, 1};
        } else if (err.value == best.error.value) {
          // Enumeration order is the tie-break priority order; keep the
          // incumbent and count the tie.
          ++best.tied_candidates;
        }
      }
    }
  }
  return best;
}

std::string selection_to_json(const Selection& s) {
  nlohmann::json root;
  if (!s.feasible) {
    root["feasible"] = false;
    return root.dump(2) + "\n";
  }
  root["feasible"] = true;
  root["expected_error"] = s.error.value;
  nlohmann::json contributions = nlohmann::json::array();
  for (const auto& t : s.error.contributions) {
    contributions.push_back({{"pair", {t.logical_pair.first, t.logical_pair.second}},
                             {"weight", t.weight},
                             {"rate", t.rate},
                             {"term", t.term}});
  }
  root["contributions"] = contributions;
  nlohmann::json mask = nlohmann::json::array();
  for (bool b : s.mask.bits) mask.push_back(b ? 1 : 0);
  root["mask"] = mask;
  root["entry_shift"] = s.entry_shift;
  nlohmann::json assignment = nlohmann::json::object();
  for (const auto& [logical, phys] : s.assignment) {
    assignment["q" + std::to_string(logical)] = phys;
  }
  root["assignment"] = assignment;
  root["tied_candidates"] = s.tied_candidates;
  return root.dump(2) + "\n";
}

FaultModel fault_model_for(const Circuit& c, const Assignment& assignment,
                           const Architecture& arch, const ResponseFunction& f,
                           FaultAction action) {
  FaultModel fm;
  fm.action = action;
  for (const Gate& g : c.gates()) {
    if (!g.is_cx()) continue;
    auto a = assignment.find(g.a);
    auto b = assignment.find(g.b);
    if (a == assignment.end() || b == assignment.end()) {
      throw std::invalid_argument("assignment misses a CNOT endpoint");
    }
    fm.cnot_fault_prob.push_back(f(arch.error(a->second, b->second)));
  }
  return fm;
}

FaultMcReport fault_mc_report(const Circuit& c, const FaultModel& fm, std::uint64_t trials,
                              std::uint64_t seed, int n, int k, int threads) {
  const MonteCarloResult mc = fault_monte_carlo(c, fm, trials, seed, threads);
  return FaultMcReport{mc.mean_faulty_cnots, em_measure(mc.pooled, n, k), mc.trials};
}

}  // namespace dicke
