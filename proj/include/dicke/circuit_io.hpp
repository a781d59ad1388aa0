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

#include <stdexcept>
#include <string>

#include "dicke/circuit.hpp"

namespace dicke {

/// Raised on malformed circuit text. line/column are 1-based; column 0 means
/// the error is semantic rather than lexical.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line;
  std::size_t column;
};

/// Circuit JSON:
///   {"n": int, "gates": [{"g":"x","q":i} | {"g":"ry","q":i,"theta":t}
///                        | {"g":"cx","c":i,"t":j}]}
/// Qubits are 1-indexed. Output is deterministic.
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

/// OpenQASM 2.0 text. Wires are 0-indexed (qubit i maps to wire i-1).
std::string circuit_to_qasm(const Circuit& c, bool with_measurements = false);

}  // namespace dicke
