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

#include <string>
#include <utility>
#include <vector>

#include "dicke/dicke_builder.hpp"
#include "dicke/simulator.hpp"
#include "dicke/topology.hpp"

namespace dicke {

/// Monotone nondecreasing map from coupling error rate to per-CNOT fault
/// probability, both in [0, 1]. Monotonicity is enforced at construction;
/// nothing else about the response is assumed.
class ResponseFunction {
 public:
  static ResponseFunction identity();
  static ResponseFunction affine(double slope, double offset);
  static ResponseFunction tabulated(std::vector<std::pair<double, double>> points);

  double operator()(double error_rate) const;
  const std::string& description() const { return description_; }

 private:
  enum class Kind { Identity, Affine, Tabulated };
  Kind kind_ = Kind::Identity;
  double slope_ = 1.0;
  double offset_ = 0.0;
  std::vector<std::pair<double, double>> points_;
  std::string description_ = "identity";
};

/// Half L1 distance between observed outcome proportions and the ideal
/// weight-w distribution; 0 on exact agreement, at most 1. Proportions are
/// handled as exact integer ratios before the division.
double em_measure(const MeasurementHistogram& h, int n, int w);

struct ExpectedError {
  struct Term {
    std::pair<int, int> logical_pair;  // (min, max), 1-based
    int weight;
    double rate;
    double term;
  };
  double value = 0.0;
  std::vector<Term> contributions;
};

/// Sum of weight * f(rate) over the mapped pairs of a weighted CNOT map.
/// Every weighted pair must land on an architecture edge.
ExpectedError expected_cnot_error(const CnotMap& weighted_map, const Assignment& assignment,
                                  const Architecture& arch, const ResponseFunction& f);

struct Selection {
  bool feasible = false;
  VariantMask mask;
  bool entry_shift = false;
  Assignment assignment;
  ExpectedError error;
  int tied_candidates = 0;  // optima sharing the minimal expected error
};

/// Exhaustive minimization over variant masks x entry placement x feasible
/// assignments. Ties break toward the lexicographically least mask, plain
/// entry before shifted, then the lexicographically least assignment.
Selection select_best(const DickeParams& p, const Architecture& arch,
                      const ResponseFunction& f);

std::string selection_to_json(const Selection& s);

/// Per-CNOT fault probabilities for a circuit placed on an architecture:
/// probability f(e) of the physical coupling each CNOT lands on.
FaultModel fault_model_for(const Circuit& c, const Assignment& assignment,
                           const Architecture& arch, const ResponseFunction& f,
                           FaultAction action = FaultAction::DepolarizingPair);

struct FaultMcReport {
  double mean_faulty_cnots = 0.0;
  double em = 0.0;
  std::uint64_t trials = 0;
};

FaultMcReport fault_mc_report(const Circuit& c, const FaultModel& fm, std::uint64_t trials,
                              std::uint64_t seed, int n, int k, int threads = 1);

}  // namespace dicke
