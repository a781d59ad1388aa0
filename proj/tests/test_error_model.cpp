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

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "dicke/dicke_builder.hpp"
#include "dicke/error_model.hpp"
#include "dicke/simulator.hpp"
#include "dicke/topology.hpp"

using namespace dicke;

namespace {

// The four-qubit study architecture with the worked rate set.
Architecture a4_with_rates(double e01 = 0.02, double e02 = 0.01, double e12 = 0.015,
                           double e13 = 0.01) {
  Architecture arch = bundled_architecture("a4");
  arch.set_error(0, 1, e01);
  arch.set_error(0, 2, e02);
  arch.set_error(1, 2, e12);
  arch.set_error(1, 3, e13);
  return arch;
}

Circuit c42(bool entry_shift = false) {
  const DickeParams p(4, 2);
  BuildOptions options;
  options.entry_shift = entry_shift;
  return build_optimized(p, VariantMask::zeros(p), options);
}

// First documented placement: the degree-3 logical qubit on physical 1.
Assignment plain_assignment() { return {{1, 0}, {2, 1}, {3, 2}, {4, 3}}; }
Assignment shifted_assignment() { return {{1, 0}, {2, 2}, {3, 1}, {4, 3}}; }

MeasurementHistogram ideal_histogram(int n, int k, std::uint64_t per_state) {
  MeasurementHistogram h;
  h.n = n;
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    if (popcount64(v) == k) {
      h.counts[v] = per_state;
      h.shots += per_state;
    }
  }
  return h;
}

}  // namespace

TEST_CASE("response functions") {
  CHECK(ResponseFunction::identity()(0.3) == doctest::Approx(0.3));
  const ResponseFunction affine = ResponseFunction::affine(0.5, 0.1);
  CHECK(affine(0.2) == doctest::Approx(0.2));
  const ResponseFunction table =
      ResponseFunction::tabulated({{0.0, 0.0}, {0.01, 0.2}, {0.02, 0.5}, {1.0, 1.0}});
  CHECK(table(0.015) == doctest::Approx(0.35));
  CHECK(table(0.01) == doctest::Approx(0.2));
  SUBCASE("monotonicity enforced") {
    CHECK_THROWS_AS(ResponseFunction::affine(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ResponseFunction::tabulated({{0.0, 0.5}, {1.0, 0.1}}),
                    std::invalid_argument);
  }
  SUBCASE("range enforced") {
    CHECK_THROWS_AS(ResponseFunction::affine(0.9, 0.5), std::invalid_argument);
  }
}

TEST_CASE("em_measure") {
  SUBCASE("exact ideal distribution gives zero") {
    CHECK(em_measure(ideal_histogram(4, 2, 100), 4, 2) == 0.0);
  }
  SUBCASE("all mass on one wrong-weight state gives one") {
    MeasurementHistogram h;
    h.n = 4;
    h.shots = 8192;
    h.counts[0b0001] = 8192;
    CHECK(em_measure(h, 4, 2) == 1.0);
  }
  SUBCASE("always within [0, 1]") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
      MeasurementHistogram h;
      h.n = 4;
      for (int i = 0; i < 6; ++i) {
        const std::uint64_t v = rng() % 16;
        const std::uint64_t cnt = rng() % 500;
        h.counts[v] += cnt;
        h.shots += cnt;
      }
      if (h.shots == 0) continue;
      const double em = em_measure(h, 4, 2);
      CHECK(em >= 0.0);
      CHECK(em <= 1.0);
    }
  }
  SUBCASE("zero shots rejected") {
    MeasurementHistogram h;
    h.n = 4;
    CHECK_THROWS_AS(em_measure(h, 4, 2), std::invalid_argument);
  }
  SUBCASE("out-of-range index rejected") {
    MeasurementHistogram h;
    h.n = 4;
    h.shots = 1;
    h.counts[16] = 1;
    CHECK_THROWS_AS(em_measure(h, 4, 2), std::invalid_argument);
  }
  SUBCASE("nonzero iff proportions deviate") {
    MeasurementHistogram h = ideal_histogram(4, 2, 100);
    ++h.counts[0b0011];
    --h.counts[0b0101];
    CHECK(em_measure(h, 4, 2) > 0.0);
  }
}

TEST_CASE("expected_cnot_error reproduces the symbolic per-pair forms") {
  const Architecture arch = a4_with_rates();
  const CnotMap plain = extract_map(c42());
  const CnotMap shifted = extract_map(c42(true));
  for (const ResponseFunction& f :
       {ResponseFunction::identity(), ResponseFunction::affine(0.5, 0.1),
        ResponseFunction::tabulated({{0.0, 0.0}, {0.01, 0.2}, {0.02, 0.5}, {1.0, 1.0}})}) {
    const double e01 = f(arch.error(0, 1)), e02 = f(arch.error(0, 2));
    const double e12 = f(arch.error(1, 2)), e13 = f(arch.error(1, 3));
    CHECK(expected_cnot_error(plain, plain_assignment(), arch, f).value ==
          doctest::Approx(5 * e01 + 3 * e02 + 3 * e12 + e13).epsilon(1e-12));
    CHECK(expected_cnot_error(shifted, shifted_assignment(), arch, f).value ==
          doctest::Approx(5 * e02 + 3 * e01 + 3 * e12 + e13).epsilon(1e-12));
  }
  SUBCASE("identity response, worked rates: 0.185 and 0.165") {
    const ResponseFunction id = ResponseFunction::identity();
    CHECK(expected_cnot_error(plain, plain_assignment(), arch, id).value ==
          doctest::Approx(0.185).epsilon(1e-12));
    CHECK(expected_cnot_error(shifted, shifted_assignment(), arch, id).value ==
          doctest::Approx(0.165).epsilon(1e-12));
  }
  SUBCASE("all-zero rates give zero") {
    CHECK(expected_cnot_error(plain, plain_assignment(), bundled_architecture("a4"),
                              ResponseFunction::identity())
              .value == 0.0);
  }
  SUBCASE("unmapped pair rejected") {
    Assignment bad = plain_assignment();
    bad.erase(4);
    CHECK_THROWS_AS(expected_cnot_error(plain, bad, arch, ResponseFunction::identity()),
                    std::invalid_argument);
  }
  SUBCASE("monotone in any single rate") {
    const ResponseFunction id = ResponseFunction::identity();
    Architecture bumped = a4_with_rates();
    bumped.set_error(1, 2, 0.03);
    CHECK(expected_cnot_error(plain, plain_assignment(), bumped, id).value >
          expected_cnot_error(plain, plain_assignment(), arch, id).value);
  }
}

TEST_CASE("variant preference flips exactly where the two rates cross") {
  const ResponseFunction id = ResponseFunction::identity();
  auto difference = [&](double e01, double e02) {
    const Architecture arch = a4_with_rates(e01, e02, 0.05, 0.01);
    const double plain = expected_cnot_error(extract_map(c42()), plain_assignment(), arch, id).value;
    const double shifted =
        expected_cnot_error(extract_map(c42(true)), shifted_assignment(), arch, id).value;
    return plain - shifted;  // positive: the shifted variant is preferable
  };
  CHECK(difference(0.02, 0.01) > 0.0);
  CHECK(difference(0.01, 0.02) < 0.0);
  CHECK(difference(0.015, 0.015) == doctest::Approx(0.0).epsilon(1e-15));
  // The two symbolic forms differ by 2 (f(e01) - f(e02)).
  CHECK(difference(0.02, 0.01) == doctest::Approx(2 * (0.02 - 0.01)).epsilon(1e-12));
}

TEST_CASE("select_best") {
  const DickeParams p(4, 2);
  const ResponseFunction id = ResponseFunction::identity();
  SUBCASE("prefers the entry-shifted family when e02 < e01") {
    const Selection s = select_best(p, a4_with_rates(0.02, 0.01, 0.05, 0.01), id);
    REQUIRE(s.feasible);
    CHECK(s.entry_shift);
  }
  SUBCASE("prefers the plain family when e01 < e02") {
    const Selection s = select_best(p, a4_with_rates(0.01, 0.02, 0.05, 0.01), id);
    REQUIRE(s.feasible);
    CHECK(!s.entry_shift);
  }
  SUBCASE("tie broken toward the least mask and plain entry, ties reported") {
    // Dyadic rates keep the tied sums bit-identical: with e01 = e02 the two
    // masks' best placements both evaluate to 6*e01 + 5*e12 + e13.
    const Selection s =
        select_best(p, a4_with_rates(0.015625, 0.015625, 0.0078125, 0.0078125), id);
    REQUIRE(s.feasible);
    CHECK(!s.entry_shift);
    CHECK(s.mask.bits == std::vector<bool>{false});
    CHECK(s.tied_candidates == 2);
    const Assignment expected = {{1, 2}, {2, 1}, {3, 0}, {4, 3}};
    CHECK(s.assignment == expected);
  }
  SUBCASE("infeasible reported explicitly") {
    const Selection s = select_best(DickeParams(5, 2), bundled_architecture("ibmqx2"), id);
    CHECK(!s.feasible);
  }
  SUBCASE("report JSON carries the breakdown") {
    const Selection s = select_best(p, a4_with_rates(), id);
    const std::string json = selection_to_json(s);
    CHECK(json.find("expected_error") != std::string::npos);
    CHECK(json.find("contributions") != std::string::npos);
    CHECK(json.find("assignment") != std::string::npos);
  }
}

TEST_CASE("Monte-Carlo agrees with the closed form") {
  const Architecture arch = a4_with_rates();
  const ResponseFunction id = ResponseFunction::identity();
  const std::uint64_t trials = 100000;

  SUBCASE("plain variant: 0.185") {
    const Circuit c = c42();
    const FaultModel fm = fault_model_for(c, plain_assignment(), arch, id);
    const FaultMcReport report = fault_mc_report(c, fm, trials, 2024, 4, 2);
    double variance = 0.0;
    for (double pr : fm.cnot_fault_prob) variance += pr * (1 - pr);
    const double sigma = std::sqrt(variance / static_cast<double>(trials));
    CHECK(std::abs(report.mean_faulty_cnots - 0.185) < 3.0 * sigma);
    CHECK(report.em < 0.2);  // a faint noise floor, far from the noiseless ~0.01
  }
  SUBCASE("entry-shifted variant: 0.165") {
    const Circuit c = c42(true);
    const FaultModel fm = fault_model_for(c, shifted_assignment(), arch, id);
    const FaultMcReport report = fault_mc_report(c, fm, trials, 2025, 4, 2);
    double variance = 0.0;
    for (double pr : fm.cnot_fault_prob) variance += pr * (1 - pr);
    const double sigma = std::sqrt(variance / static_cast<double>(trials));
    CHECK(std::abs(report.mean_faulty_cnots - 0.165) < 3.0 * sigma);
  }

  SUBCASE("every feasible (mask, placement) pair agrees") {
    const DickeParams p(4, 2);
    std::uint64_t seed = 90;
    for (const auto& mask : enumerate_variants(p)) {
      for (const bool shift : {false, true}) {
        BuildOptions options;
        options.entry_shift = shift;
        const Circuit c = build_optimized(p, mask, options);
        const CnotMap wm = extract_map(c);
        for (const auto& asg : find_mappings(wm, arch)) {
          const double closed = expected_cnot_error(wm, asg, arch, id).value;
          const FaultModel fm = fault_model_for(c, asg, arch, id);
          const MonteCarloResult mc = fault_monte_carlo(c, fm, 20000, seed++);
          double variance = 0.0;
          for (double pr : fm.cnot_fault_prob) variance += pr * (1 - pr);
          const double sigma = std::sqrt(variance / 20000.0);
          CHECK(std::abs(mc.mean_faulty_cnots - closed) < 3.5 * sigma);
        }
      }
    }
  }
}
