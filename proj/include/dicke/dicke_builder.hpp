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

#include <vector>

#include "dicke/circuit.hpp"

namespace dicke {

struct DickeParams {
  int n;
  int k;
  DickeParams(int n, int k);
};

/// theta(x, y) = 2 acos(sqrt(x / y)); the whole angle family of the builders.
double split_angle(int x, int y);

/// One split-and-shift block of the unreduced construction: the two-qubit
/// split on wires (superscript-1, superscript) followed by weight-1
/// three-qubit splits on (l-1, l, superscript) with descending l.
struct BlockSpec {
  int superscript;                  // m: the block's high wire
  int weight;                       // w: block subscript
  std::vector<int> triple_low_wires;  // l = m-1 down to m-w+1
};

/// The n-1 blocks in application order: first n-k blocks of weight k with
/// superscripts n down to k+1, then k-1 blocks of superscript j and weight
/// j-1 for j = k down to 2.
std::vector<BlockSpec> block_structure(const DickeParams& p);

/// One boolean per block whose final three-qubit split admits both CNOT
/// placements (the blocks with high wire n-1 down to k+1), so length
/// max(n-k-1, 0). Each bit picks the placement at the junction in front of
/// that split:
///   bit = 0  keep the predecessor's closing CNOT, drop the split's opening
///            (the placement whose per-pair CNOT weights the map analysis
///            uses);
///   bit = 1  merge the predecessor's closing CNOT into a rearranged opening.
/// Both placements leave the prepared state, the CNOT total and the
/// unweighted CNOT map unchanged; only per-pair weights move.
struct VariantMask {
  std::vector<bool> bits;

  static VariantMask zeros(const DickeParams& p);
  static VariantMask ones(const DickeParams& p);
  static int expected_length(const DickeParams& p);
};

struct BuildOptions {
  /// Emit every split uncanceled (6-CNOT three-qubit form); the peephole
  /// pass then reproduces the canonical counts.
  bool naive = false;
  /// Relocate the entry CNOT from (n-k, n) to (n-1, n) and start from the
  /// preparation with qubit n left at |0>. Changes one edge of the CNOT map;
  /// gate counts and the prepared state are unchanged.
  bool entry_shift = false;
};

/// The unoptimized construction: every block keeps its two-qubit split as a
/// CRy sandwich and each three-qubit split costs 5 CNOT after the junction
/// merge. Valid for 1 <= k <= n-1.
Circuit build_baseline(const DickeParams& p, bool naive = false);

/// The reduced construction: identity splits removed, two-qubit splits in
/// three-gate controlled-U form, block-leading splits in two-qubit form, the
/// first block collapsed to one rotation and one CNOT. Valid for
/// 2 <= k <= n; k = n degenerates to X on every qubit.
Circuit build_optimized(const DickeParams& p, const VariantMask& mask,
                        const BuildOptions& options = {});

/// Weight-1 chain: 2n-2 CNOT and 2n-2 rotations.
Circuit build_w_linear(int n);

/// Builds the weight-(n-k) circuit and appends X on every qubit.
Circuit build_via_complement(const DickeParams& p);

/// Closed-form gate counts the builders must reproduce.
GateCounts predicted_counts(const DickeParams& p, bool optimized);

/// All 2^(n-k-1) masks in deterministic order (bit i of the enumeration
/// index is bits[i]).
std::vector<VariantMask> enumerate_variants(const DickeParams& p);

/// Dispatcher used by the CLI: k = 1 delegates to the weight-1 chain,
/// 2 <= k <= n-1 to the optimized builder, k = n to plain X gates.
Circuit build_dicke(int n, int k, const VariantMask* mask = nullptr,
                    const BuildOptions& options = {});

}  // namespace dicke
