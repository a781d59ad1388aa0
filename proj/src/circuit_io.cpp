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

#include "dicke/circuit_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace dicke {

using nlohmann::json;

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                         std::to_string(column_) + ": " + what_),
      line(line_),
      column(column_) {}

namespace {

std::string format_angle(double theta) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", theta);
  return buf;
}

// Maps a byte offset from nlohmann's parse_error into line/column.
std::pair<std::size_t, std::size_t> offset_to_line_col(const std::string& text,
                                                       std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void semantic_error(const std::string& what) { throw ParseError(0, 0, what); }

int get_index(const json& obj, const char* key, int n, std::size_t gate_pos) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    semantic_error("gate " + std::to_string(gate_pos) + ": missing integer field '" + key + "'");
  }
  const int q = obj[key].get<int>();
  if (q < 1 || q > n) {
    semantic_error("gate " + std::to_string(gate_pos) + ": qubit index " + std::to_string(q) +
                   " outside [1, " + std::to_string(n) + "]");
  }
  return q;
}

}  // namespace

std::string circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::PauliX:
        gates.push_back(json{{"g", "x"}, {"q", g.a}});
        break;
      case GateKind::RotY:
        gates.push_back(json{{"g", "ry"}, {"q", g.a}, {"theta", g.theta}});
        break;
      case GateKind::ControlledNot:
        gates.push_back(json{{"g", "cx"}, {"c", g.a}, {"t", g.b}});
        break;
    }
  }
  json root{{"n", c.qubit_count()}, {"gates", gates}};
  return root.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, e.what());
  }
  if (!root.is_object() || !root.contains("n") || !root["n"].is_number_integer()) {
    semantic_error("top-level object must carry an integer field 'n'");
  }
  const int n = root["n"].get<int>();
  if (n < 1) semantic_error("'n' must be positive");
  if (!root.contains("gates") || !root["gates"].is_array()) {
    semantic_error("top-level object must carry an array field 'gates'");
  }

  Circuit c(n);
  std::size_t pos = 0;
  for (const json& item : root["gates"]) {
    if (!item.is_object() || !item.contains("g") || !item["g"].is_string()) {
      semantic_error("gate " + std::to_string(pos) + ": expected object with string field 'g'");
    }
    const std::string kind = item["g"].get<std::string>();
    if (kind == "x") {
      c.x(get_index(item, "q", n, pos));
    } else if (kind == "ry") {
      const int q = get_index(item, "q", n, pos);
      if (!item.contains("theta") || !item["theta"].is_number()) {
        semantic_error("gate " + std::to_string(pos) + ": ry needs numeric 'theta'");
      }
      const double theta = item["theta"].get<double>();
      if (!std::isfinite(theta)) {
        semantic_error("gate " + std::to_string(pos) + ": theta must be finite");
      }
      c.ry(q, theta);
    } else if (kind == "cx") {
      const int ctrl = get_index(item, "c", n, pos);
      const int targ = get_index(item, "t", n, pos);
      if (ctrl == targ) {
        semantic_error("gate " + std::to_string(pos) + ": cx control equals target");
      }
      c.cx(ctrl, targ);
    } else {
      semantic_error("gate " + std::to_string(pos) + ": unknown gate kind '" + kind + "'");
    }
    ++pos;
  }
  return c;
}

std::string circuit_to_qasm(const Circuit& c, bool with_measurements) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.qubit_count() << "];\n";
  out << "creg c[" << c.qubit_count() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::PauliX:
        out << "x q[" << g.a - 1 << "];\n";
        break;
      case GateKind::RotY:
        out << "ry(" << format_angle(g.theta) << ") q[" << g.a - 1 << "];\n";
        break;
      case GateKind::ControlledNot:
        out << "cx q[" << g.a - 1 << "],q[" << g.b - 1 << "];\n";
        break;
    }
  }
  if (with_measurements) {
    out << "measure q -> c;\n";
  }
  return out.str();
}

}  // namespace dicke
