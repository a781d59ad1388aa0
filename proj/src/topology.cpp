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

#include "dicke/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dicke {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

constexpr int kMaxSearchNodes = 12;

}  // namespace

void CnotMap::add_cnot(int control, int target) {
  directed.insert({control, target});
  ++weight[ordered(control, target)];
}

void CnotMap::add_edge_bidirectional(int a, int b) {
  directed.insert({a, b});
  directed.insert({b, a});
  auto& w = weight[ordered(a, b)];
  if (w == 0) w = 1;
}

std::set<std::pair<int, int>> CnotMap::undirected() const {
  std::set<std::pair<int, int>> out;
  for (const auto& [pair, w] : weight) {
    (void)w;
    out.insert(pair);
  }
  return out;
}

int CnotMap::degree(int q) const {
  int d = 0;
  for (const auto& [pair, w] : weight) {
    (void)w;
    if (pair.first == q || pair.second == q) ++d;
  }
  return d;
}

bool same_undirected(const CnotMap& a, const CnotMap& b) {
  return a.num_qubits == b.num_qubits && a.undirected() == b.undirected();
}

bool same_directed(const CnotMap& a, const CnotMap& b) {
  return a.num_qubits == b.num_qubits && a.directed == b.directed;
}

bool same_weights(const CnotMap& a, const CnotMap& b) {
  return a.num_qubits == b.num_qubits && a.weight == b.weight;
}

CnotMap extract_map(const Circuit& c) {
  CnotMap m;
  m.num_qubits = c.qubit_count();
  for (const Gate& g : c.gates()) {
    if (g.is_cx()) m.add_cnot(g.a, g.b);
  }
  return m;
}

CnotMap gnk_map(int n, int k) {
  if (n < 3 || k < 2 || k > n - 1) {
    throw std::invalid_argument("closed-form map defined for 2 <= k <= n-1");
  }
  const int f = n - k;
  CnotMap m;
  m.num_qubits = n;
  // Chain edges between the low qubits; the chain above n-k disappears with
  // the removed identity splits.
  for (int i = 1; i <= f; ++i) m.add_edge_bidirectional(i, i + 1);
  // Entry edge, one direction only.
  m.directed.insert({f, n});
  if (m.weight.find(ordered(f, n)) == m.weight.end()) m.weight[ordered(f, n)] = 1;
  // Long edges of the surviving three-qubit splits. Blocks m = n-1 .. k+1
  // keep splits with low wire l = min(m-1, f+1) .. m-k+1; trailing blocks
  // m = k .. 2 keep l = min(m-1, f+1) .. 2.
  for (int mm = n - 1; mm >= 2; --mm) {
    const int hi = std::min(mm - 1, f + 1);
    const int lo = (mm >= k + 1) ? mm - k + 1 : 2;
    for (int l = hi; l >= lo; --l) m.add_edge_bidirectional(l - 1, mm);
  }
  return m;
}

bool Architecture::has_edge(int a, int b) const {
  for (const Edge& e : edges) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
  }
  return false;
}

double Architecture::error(int a, int b) const {
  for (const Edge& e : edges) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.error;
  }
  throw std::invalid_argument("no coupling between " + std::to_string(a) + " and " +
                              std::to_string(b));
}

void Architecture::set_error(int a, int b, double err) {
  for (Edge& e : edges) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
      e.error = err;
      return;
    }
  }
  throw std::invalid_argument("no coupling between " + std::to_string(a) + " and " +
                              std::to_string(b));
}

void Architecture::validate() const {
  if (qubits < 1) throw std::invalid_argument("architecture needs qubits");
  for (const Edge& e : edges) {
    if (e.a < 0 || e.a >= qubits || e.b < 0 || e.b >= qubits || e.a == e.b) {
      throw std::invalid_argument("architecture edge endpoints invalid");
    }
    if (e.error < 0.0 || e.error > 1.0) {
      throw std::invalid_argument("edge error rate outside [0, 1]");
    }
  }
}

std::string architecture_to_json(const Architecture& arch) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : arch.edges) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"error", e.error}});
  }
  nlohmann::json root{{"name", arch.name}, {"qubits", arch.qubits}, {"edges", edges}};
  return root.dump(2) + "\n";
}

Architecture architecture_from_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text);
  Architecture arch;
  arch.name = root.at("name").get<std::string>();
  arch.qubits = root.at("qubits").get<int>();
  for (const auto& e : root.at("edges")) {
    arch.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(),
                          e.value("error", 0.0)});
  }
  arch.validate();
  return arch;
}

std::vector<Architecture> bundled_architectures() {
  Architecture a4{"a4", 4, {{0, 1, 0.0}, {0, 2, 0.0}, {1, 2, 0.0}, {1, 3, 0.0}}};
  Architecture qx2{"ibmqx2",
                   5,
                   {{0, 1, 0.0}, {0, 2, 0.0}, {1, 2, 0.0}, {2, 3, 0.0}, {2, 4, 0.0}, {3, 4, 0.0}}};
  Architecture qx2fig{"ibmqx2-fig6",
                      5,
                      {{0, 1, 0.0}, {0, 2, 0.0}, {1, 2, 0.0}, {1, 3, 0.0}, {1, 4, 0.0}, {3, 4, 0.0}}};
  return {a4, qx2, qx2fig};
}

Architecture bundled_architecture(const std::string& name) {
  for (Architecture& a : bundled_architectures()) {
    if (a.name == name) return a;
  }
  throw std::invalid_argument("no bundled architecture named '" + name + "'");
}

namespace {

struct MappingSearch {
  const CnotMap& cm;
  const Architecture& arch;
  std::vector<int> order;             // logical qubits, high degree first
  std::map<int, int> placement;       // logical -> physical
  std::vector<bool> used;             // physical occupancy
  std::vector<Assignment> results;

  MappingSearch(const CnotMap& cm_, const Architecture& arch_) : cm(cm_), arch(arch_) {
    used.assign(arch.qubits, false);
    for (int q = 1; q <= cm.num_qubits; ++q) order.push_back(q);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cm.degree(a) > cm.degree(b); });
  }

  bool compatible(int logical, int phys) const {
    for (const auto& [pair, w] : cm.weight) {
      (void)w;
      int other = -1;
      if (pair.first == logical) other = pair.second;
      else if (pair.second == logical) other = pair.first;
      else continue;
      auto it = placement.find(other);
      if (it != placement.end() && !arch.has_edge(phys, it->second)) return false;
    }
    return true;
  }

  void run(std::size_t depth) {
    if (depth == order.size()) {
      results.emplace_back(placement.begin(), placement.end());
      return;
    }
    const int logical = order[depth];
    for (int phys = 0; phys < arch.qubits; ++phys) {
      if (used[phys] || !compatible(logical, phys)) continue;
      used[phys] = true;
      placement[logical] = phys;
      run(depth + 1);
      placement.erase(logical);
      used[phys] = false;
    }
  }
};

std::vector<int> assignment_key(const Assignment& a) {
  std::vector<int> key;
  key.reserve(a.size());
  for (const auto& [logical, phys] : a) {
    (void)logical;
    key.push_back(phys);
  }
  return key;
}

// Generic undirected-monomorphism search: an injective node map of `a` into
// `b` carrying every edge of `a` onto an edge of `b`.
struct MonoSearch {
  const std::vector<std::set<int>>& adj_a;
  const std::vector<std::set<int>>& adj_b;
  std::vector<int> image;  // node of a (0-based) -> node of b, -1 unset
  std::vector<bool> used;

  MonoSearch(const std::vector<std::set<int>>& a, const std::vector<std::set<int>>& b)
      : adj_a(a), adj_b(b), image(a.size(), -1), used(b.size(), false) {}

  bool run(std::size_t depth) {
    if (depth == adj_a.size()) return true;
    for (std::size_t cand = 0; cand < adj_b.size(); ++cand) {
      if (used[cand]) continue;
      if (adj_b[cand].size() < adj_a[depth].size()) continue;
      bool ok = true;
      for (int nb : adj_a[depth]) {
        if (nb < static_cast<int>(depth) && image[nb] >= 0 &&
            adj_b[cand].find(image[nb]) == adj_b[cand].end()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[depth] = static_cast<int>(cand);
      used[cand] = true;
      if (run(depth + 1)) return true;
      used[cand] = false;
      image[depth] = -1;
    }
    return false;
  }
};

std::vector<std::set<int>> adjacency(const CnotMap& m) {
  std::vector<std::set<int>> adj(m.num_qubits);
  for (const auto& [pair, w] : m.weight) {
    (void)w;
    adj[pair.first - 1].insert(pair.second - 1);
    adj[pair.second - 1].insert(pair.first - 1);
  }
  return adj;
}

void check_search_size(const CnotMap& a, const CnotMap& b) {
  if (a.num_qubits > kMaxSearchNodes || b.num_qubits > kMaxSearchNodes) {
    throw std::invalid_argument("exact graph search limited to " +
                                std::to_string(kMaxSearchNodes) + " nodes");
  }
}

}  // namespace

std::vector<Assignment> find_mappings(const CnotMap& cm, const Architecture& arch) {
  if (cm.num_qubits > arch.qubits) return {};
  MappingSearch search(cm, arch);
  search.run(0);
  std::sort(search.results.begin(), search.results.end(),
            [](const Assignment& x, const Assignment& y) {
              return assignment_key(x) < assignment_key(y);
            });
  return search.results;
}

bool is_isomorphic(const CnotMap& a, const CnotMap& b) {
  check_search_size(a, b);
  if (a.num_qubits != b.num_qubits) return false;
  if (a.undirected_edge_count() != b.undirected_edge_count()) return false;
  auto degree_sequence = [](const CnotMap& m) {
    std::vector<int> d;
    for (int q = 1; q <= m.num_qubits; ++q) d.push_back(m.degree(q));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_sequence(a) != degree_sequence(b)) return false;
  // Injective edge-preserving map with equal node and edge counts is an
  // isomorphism.
  auto adj_a = adjacency(a), adj_b = adjacency(b);
  MonoSearch search(adj_a, adj_b);
  return search.run(0);
}

bool is_subgraph(const CnotMap& a, const CnotMap& b) {
  check_search_size(a, b);
  if (a.num_qubits > b.num_qubits) return false;
  const auto edges_b = b.undirected();
  for (const auto& edge : a.undirected()) {
    if (edges_b.find(edge) == edges_b.end()) return false;
  }
  return true;
}

bool has_monomorphism(const CnotMap& a, const CnotMap& b) {
  check_search_size(a, b);
  if (a.num_qubits > b.num_qubits) return false;
  if (a.undirected_edge_count() > b.undirected_edge_count()) return false;
  auto adj_a = adjacency(a), adj_b = adjacency(b);
  MonoSearch search(adj_a, adj_b);
  return search.run(0);
}

std::string to_dot(const CnotMap& m) {
  std::ostringstream out;
  out << "digraph cnot_map {\n";
  for (int q = 1; q <= m.num_qubits; ++q) out << "  q" << q << ";\n";
  for (const auto& [pair, w] : m.weight) {
    const bool fwd = m.directed.count({pair.first, pair.second}) > 0;
    const bool rev = m.directed.count({pair.second, pair.first}) > 0;
    out << "  q" << pair.first << " -> q" << pair.second << " [label=\"" << w << "\"";
    if (fwd && rev) out << ", dir=both";
    else if (!fwd && rev) out << ", dir=back";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Architecture& arch) {
  std::ostringstream out;
  out << "graph \"" << (arch.name.empty() ? std::string("architecture") : arch.name) << "\" {\n";
  for (int q = 0; q < arch.qubits; ++q) out << "  n" << q << ";\n";
  std::vector<Architecture::Edge> edges = arch.edges;
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    return ordered(x.a, x.b) < ordered(y.a, y.b);
  });
  for (const auto& e : edges) {
    auto [lo, hi] = ordered(e.a, e.b);
    out << "  n" << lo << " -- n" << hi << " [label=\"" << e.error << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dicke
