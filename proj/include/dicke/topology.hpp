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

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dicke/circuit.hpp"

namespace dicke {

/// Directed CNOT-usage graph of a circuit. Nodes are the logical qubits
/// 1..num_qubits; weight counts CNOTs per unordered pair.
struct CnotMap {
  int num_qubits = 0;
  std::set<std::pair<int, int>> directed;            // (control, target)
  std::map<std::pair<int, int>, int> weight;         // key: (min, max)

  void add_cnot(int control, int target);
  void add_edge_bidirectional(int a, int b);
  std::set<std::pair<int, int>> undirected() const;
  int degree(int q) const;
  int undirected_edge_count() const { return static_cast<int>(weight.size()); }
};

bool same_undirected(const CnotMap& a, const CnotMap& b);
bool same_directed(const CnotMap& a, const CnotMap& b);
bool same_weights(const CnotMap& a, const CnotMap& b);

CnotMap extract_map(const Circuit& c);

/// Closed-form CNOT map of the reduced weight-k builder, independent of the
/// gate-level construction: chain edges (i, i+1) for i = 1..n-k, the one-way
/// entry edge (n-k) -> n, and the long edges (l-1, m) of the surviving
/// three-qubit splits. Total undirected edges: nk - k^2.
CnotMap gnk_map(int n, int k);

/// Physical coupling graph. Nodes 0..qubits-1; edges are bidirectional and
/// carry a CNOT error rate in [0, 1].
struct Architecture {
  struct Edge {
    int a;
    int b;
    double error;
  };
  std::string name;
  int qubits = 0;
  std::vector<Edge> edges;

  bool has_edge(int a, int b) const;
  double error(int a, int b) const;
  void set_error(int a, int b, double e);
  void validate() const;
};

/// Architecture JSON:
///   {"name":str,"qubits":int,"edges":[{"a":int,"b":int,"error":float}]}
std::string architecture_to_json(const Architecture& arch);
Architecture architecture_from_json(const std::string& text);

/// a4 (the four-qubit study architecture), ibmqx2 (center node 2, the
/// coupling under which the worked qubit placement of the five-qubit machine
/// is valid) and ibmqx2-fig6 (the center-1 drawing, kept for completeness).
std::vector<Architecture> bundled_architectures();
Architecture bundled_architecture(const std::string& name);

/// Injective logical (1-based) -> physical (0-based) placement.
using Assignment = std::map<int, int>;

/// Every injective placement of all map nodes under which each undirected
/// circuit edge lands on an architecture edge. Sorted lexicographically by
/// (physical of q1, physical of q2, ...). Empty means infeasible without
/// routing.
std::vector<Assignment> find_mappings(const CnotMap& cm, const Architecture& arch);

/// Exact decisions on the undirected collapses; guarded to 12 nodes.
/// is_subgraph uses the labeled notion: every edge of `a`, as a pair of
/// qubit labels, is an edge of `b`. has_monomorphism searches for an
/// injective relabeling instead; the two can genuinely disagree (an
/// unlabeled embedding of the (6,2) map into the (6,3) map exists even
/// though the labeled inclusion fails).
bool is_isomorphic(const CnotMap& a, const CnotMap& b);
bool is_subgraph(const CnotMap& a, const CnotMap& b);
bool has_monomorphism(const CnotMap& a, const CnotMap& b);

/// DOT text. Maps render as digraphs with one edge per pair (dir=both when
/// both orientations occur) and the weight as label; architectures render as
/// undirected graphs labeled with error rates.
std::string to_dot(const CnotMap& m);
std::string to_dot(const Architecture& arch);

}  // namespace dicke
