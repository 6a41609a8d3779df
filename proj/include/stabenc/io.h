// Copyright 2026 The stabenc Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabenc/pauli.h"
#include "stabenc/sim.h"
#include "stabenc/standard_form.h"
#include "stabenc/synth.h"

namespace stabenc {

/// Malformed input text. `line` and `column` are 1-based; column is 0 when
/// the error concerns the whole line or file.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Stabilizer file:
//
//   # comment
//   n 8
//   XXXXXXXX
//   -ZZZZZZZZ
//
// The "n" directive is optional when at least one generator is present.
struct StabilizerFile {
  std::size_t n = 0;
  std::vector<PauliString> generators;
};

StabilizerFile parse_stabilizer(std::string_view text);
std::string emit_stabilizer(std::size_t n, const std::vector<PauliString>& generators);

// Circuit file: a header describing the wires followed by one gate per line,
// "KIND [control] target", with 0-based wire indices.
std::string emit_circuit(const EncodingCircuit& c);
EncodingCircuit parse_circuit(std::string_view text);

// State file: "qubits N" followed by "<bits> <amplitude>" lines for the
// nonzero amplitudes, qubit 0 leftmost.
std::string emit_state(const StateVector& s, double threshold = 1e-12);
StateVector parse_state(std::string_view text, std::size_t cap = kDefaultSimCap);

/// Parses a string of '0'/'1' characters.
BitVector parse_bits(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Thrown by read_file / write_file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stabenc
