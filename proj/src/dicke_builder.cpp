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

#include "dicke/dicke_builder.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace dicke {

namespace {

constexpr double kPi = 3.14159265358979323846;

// One transformation of a block. The circuit is a sequence of blocks; each
// block is a two-qubit split followed by three-qubit splits with descending
// low wire. In the reduced construction a block whose two-qubit split acts
// inside the all-|1> zone starts with a two-qubit form of its first
// non-identity split instead, and the very first block collapses to a single
// rotation plus CNOT.
struct Member {
  enum class Kind { Entry, MuFull, MuType, TripleM };
  Kind kind;
  int l = 0;         // TripleM/MuType low wire index (MuType stores l = f+1)
  int m = 0;         // block superscript: the high wire
  int knob_bit = -1; // >= 0: mask bit steering the junction in front of this split
};

std::vector<Member> optimized_members(int n, int k) {
  const int f = n - k;
  std::vector<Member> ms;
  auto knob_for = [&](int m) { return (m >= k + 1 && m <= n - 1) ? n - m - 1 : -1; };

  // Blocks with superscript m = n .. k+1 carry k-1 three-qubit splits; the
  // trailing blocks m = k .. 2 carry m-2.
  for (int m = n; m >= 2; --m) {
    const int lo = (m >= k + 1) ? m - k + 1 : 2;
    if (m == n) {
      ms.push_back({Member::Kind::Entry, f + 1, n, -1});
      continue;
    }
    if (m >= f + 2) {
      ms.push_back({Member::Kind::MuType, f + 1, m, -1});
      for (int l = f; l >= lo; --l) {
        ms.push_back({Member::Kind::TripleM, l, m, l == lo ? knob_for(m) : -1});
      }
    } else {
      ms.push_back({Member::Kind::MuFull, m - 1, m, -1});
      for (int l = m - 1; l >= lo; --l) {
        ms.push_back({Member::Kind::TripleM, l, m, l == lo ? knob_for(m) : -1});
      }
    }
  }
  return ms;
}

std::vector<Member> baseline_members(const DickeParams& p) {
  std::vector<Member> ms;
  for (const BlockSpec& block : block_structure(p)) {
    ms.push_back({Member::Kind::MuFull, block.superscript - 1, block.superscript, -1});
    for (int l : block.triple_low_wires) {
      ms.push_back({Member::Kind::TripleM, l, block.superscript, -1});
    }
  }
  return ms;
}

struct Emitter {
  Circuit c;
  std::optional<Gate> pending;  // closing CNOT awaiting the junction decision
  bool shift_entry = false;     // next opening absorbs the entry CNOT

  explicit Emitter(int n) : c(n) {}

  void flush() {
    if (pending) {
      c.append(*pending);
      pending.reset();
    }
  }

  // Opening CNOT of a two-qubit split, honoring a pending entry shift.
  void open_two_qubit(int low, int m, int n) {
    if (shift_entry) {
      pending.reset();
      c.cx(low, m);
      c.cx(n - 1, n);
      shift_entry = false;
    } else {
      flush();
      c.cx(low, m);
    }
  }
};

void emit_mu_optimized(Emitter& e, int low, int m, double theta, int n) {
  const double alpha = kPi - theta;
  e.open_two_qubit(low, m, n);
  e.c.ry(low, alpha / 2.0);
  e.c.cx(m, low);
  e.c.ry(low, -alpha / 2.0);
  e.pending = Gate::cx(low, m);
}

void emit_mu_baseline(Emitter& e, int m, double theta) {
  e.flush();
  e.c.cx(m - 1, m);
  e.c.cx(m, m - 1);
  e.c.ry(m - 1, -theta / 2.0);
  e.c.cx(m, m - 1);
  e.c.ry(m - 1, theta / 2.0);
  e.pending = Gate::cx(m - 1, m);
}

enum class Junction { Merge, KeepClosing, Naive };

void emit_triple(Emitter& e, int l, int m, double theta, Junction junction) {
  // A three-qubit split is always preceded in its block by a member whose
  // closing CNOT is CX(l, m); the junction decides its fate.
  if (!e.pending || *e.pending != Gate::cx(l, m)) {
    throw std::logic_error("three-qubit split without matching closing CNOT");
  }
  switch (junction) {
    case Junction::Merge:
      e.pending.reset();
      e.c.cx(l, l - 1);
      e.c.cx(l - 1, m);
      break;
    case Junction::KeepClosing:
      e.flush();
      e.c.cx(l, l - 1);
      break;
    case Junction::Naive:
      e.flush();
      e.c.cx(l - 1, m);
      e.c.cx(l, l - 1);
      break;
  }
  e.c.ry(l - 1, -theta / 4.0);
  e.c.cx(m, l - 1);
  e.c.ry(l - 1, theta / 4.0);
  e.c.cx(l, l - 1);
  e.c.ry(l - 1, -theta / 4.0);
  e.c.cx(m, l - 1);
  e.c.ry(l - 1, theta / 4.0);
  e.pending = Gate::cx(l - 1, m);
}

}  // namespace

DickeParams::DickeParams(int n_, int k_) : n(n_), k(k_) {
  if (n < 2) {
    throw std::invalid_argument("need at least two qubits");
  }
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("weight " + std::to_string(k) + " outside [1, " +
                                std::to_string(n - 1) + "]");
  }
}

double split_angle(int x, int y) {
  if (x < 1 || y < x) {
    throw std::invalid_argument("split angle needs 1 <= x <= y");
  }
  return 2.0 * std::acos(std::sqrt(static_cast<double>(x) / static_cast<double>(y)));
}

std::vector<BlockSpec> block_structure(const DickeParams& p) {
  std::vector<BlockSpec> blocks;
  for (int m = p.n; m >= 2; --m) {
    const int w = (m >= p.k + 1) ? p.k : m - 1;
    BlockSpec block{m, w, {}};
    for (int l = m - 1; l >= m - w + 1; --l) block.triple_low_wires.push_back(l);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int VariantMask::expected_length(const DickeParams& p) {
  const int len = p.n - p.k - 1;
  return len > 0 ? len : 0;
}

VariantMask VariantMask::zeros(const DickeParams& p) {
  return VariantMask{std::vector<bool>(expected_length(p), false)};
}

VariantMask VariantMask::ones(const DickeParams& p) {
  return VariantMask{std::vector<bool>(expected_length(p), true)};
}

Circuit build_baseline(const DickeParams& p, bool naive) {
  const int n = p.n, k = p.k;
  Emitter e(n);
  for (int q = n - k + 1; q <= n; ++q) e.c.x(q);
  for (const Member& member : baseline_members(p)) {
    switch (member.kind) {
      case Member::Kind::MuFull:
        emit_mu_baseline(e, member.m, split_angle(1, member.m));
        break;
      case Member::Kind::TripleM:
        emit_triple(e, member.l, member.m, split_angle(member.m - member.l + 1, member.m),
                    naive ? Junction::Naive : Junction::Merge);
        break;
      default:
        throw std::logic_error("unexpected member in baseline construction");
    }
  }
  e.flush();
  return e.c;
}

Circuit build_optimized(const DickeParams& p, const VariantMask& mask,
                        const BuildOptions& options) {
  const int n = p.n, k = p.k, f = p.n - p.k;
  if (k < 2) {
    throw std::invalid_argument("optimized builder requires k >= 2; k = 1 is the linear chain");
  }
  if (static_cast<int>(mask.bits.size()) != VariantMask::expected_length(p)) {
    throw std::invalid_argument("variant mask has length " +
                                std::to_string(mask.bits.size()) + ", expected " +
                                std::to_string(VariantMask::expected_length(p)));
  }

  Emitter e(n);
  const int last_x = options.entry_shift ? n - 1 : n;
  for (int q = f + 1; q <= last_x; ++q) e.c.x(q);

  for (const Member& member : optimized_members(n, k)) {
    switch (member.kind) {
      case Member::Kind::Entry:
        e.c.ry(f, split_angle(k, n));
        e.pending = Gate::cx(f, n);
        e.shift_entry = options.entry_shift;
        break;
      case Member::Kind::MuType:
        emit_mu_optimized(e, f, member.m, split_angle(member.m - f, member.m), n);
        break;
      case Member::Kind::MuFull:
        emit_mu_optimized(e, member.m - 1, member.m, split_angle(1, member.m), n);
        break;
      case Member::Kind::TripleM: {
        Junction junction = Junction::Merge;
        if (options.naive) {
          junction = Junction::Naive;
        } else if (member.knob_bit >= 0) {
          junction = mask.bits[member.knob_bit] ? Junction::Merge : Junction::KeepClosing;
        }
        emit_triple(e, member.l, member.m, split_angle(member.m - member.l + 1, member.m),
                    junction);
        break;
      }
    }
  }
  e.flush();
  return e.c;
}

Circuit build_w_linear(int n) {
  if (n < 2) {
    throw std::invalid_argument("weight-1 chain needs n >= 2");
  }
  Circuit c(n);
  c.x(n);
  for (int m = n; m >= 2; --m) {
    const double alpha = kPi - split_angle(1, m);
    c.ry(m - 1, alpha / 2.0);
    c.cx(m, m - 1);
    c.ry(m - 1, -alpha / 2.0);
    c.cx(m - 1, m);
  }
  return c;
}

Circuit build_via_complement(const DickeParams& p) {
  const int complement = p.n - p.k;
  Circuit c = (complement == 1)
                  ? build_w_linear(p.n)
                  : build_optimized(DickeParams(p.n, complement),
                                    VariantMask::zeros(DickeParams(p.n, complement)));
  for (int q = 1; q <= p.n; ++q) c.x(q);
  return c;
}

GateCounts predicted_counts(const DickeParams& p, bool optimized) {
  const long n = p.n, k = p.k;
  GateCounts out;
  out.x = k;
  if (!optimized) {
    const long triples = n * k - k * (k + 1) / 2 - n + 1;
    out.cnot = 5 * triples + 4 * (n - 1);
    out.ry = 4 * triples + 2 * (n - 1);
    return out;
  }
  if (k == 1) {
    out.cnot = 2 * n - 2;
    out.ry = 2 * n - 2;
    return out;
  }
  out.cnot = 5 * n * k - 5 * k * k - 2 * n;
  out.ry = 4 * n * k - 4 * k * k - 2 * n + 1;
  return out;
}

std::vector<VariantMask> enumerate_variants(const DickeParams& p) {
  if (p.k < 2) {
    throw std::invalid_argument("variants exist for k >= 2 only");
  }
  const int len = VariantMask::expected_length(p);
  std::vector<VariantMask> out;
  out.reserve(1u << len);
  for (std::uint64_t v = 0; v < (1ull << len); ++v) {
    VariantMask mask;
    mask.bits.resize(len);
    for (int i = 0; i < len; ++i) mask.bits[i] = (v >> i) & 1;
    out.push_back(std::move(mask));
  }
  return out;
}

Circuit build_dicke(int n, int k, const VariantMask* mask, const BuildOptions& options) {
  if (n >= 1 && k == n) {
    Circuit c(n);
    for (int q = 1; q <= n; ++q) c.x(q);
    return c;
  }
  DickeParams p(n, k);
  if (k == 1) return build_w_linear(n);
  return build_optimized(p, mask ? *mask : VariantMask::zeros(p), options);
}

}  // namespace dicke
