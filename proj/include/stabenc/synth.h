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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabenc/pauli.h"
#include "stabenc/standard_form.h"

namespace stabenc {

/// Gate alphabet of encoding circuits. All matrices are real:
///   Q      = [[1, 1], [1, -1]] / sqrt(2)
///   R      = Q * Z         (Z acts first)
///   R_INV  = Z * Q         (Q acts first)
///   CY     = controlled X*Z (Z acts first on the target)
///   CY_INV = controlled Z*X
///   X_FIX, Z_FIX are the sign fix-up Paulis.
enum class GateKind { kQ, kR, kZ, kCX, kCY, kCZ, kRInv, kCYInv, kXFix, kZFix };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
bool is_two_qubit(GateKind kind);
GateKind inverse(GateKind kind);

struct Gate {
  GateKind kind = GateKind::kQ;
  std::optional<std::size_t> control;
  std::size_t target = 0;

  static Gate single(GateKind kind, std::size_t target) { return {kind, std::nullopt, target}; }
  static Gate controlled(GateKind kind, std::size_t control, std::size_t target) {
    return {kind, control, target};
  }

  bool operator==(const Gate& other) const = default;
};

enum class WireRole { kData, kZero, kPrimary };

struct WireTag {
  WireRole role = WireRole::kData;
  /// c_i for data wires, a_j for primary wires, position in the zero block otherwise.
  std::size_t index = 0;
  /// Standard-form row this wire carries.
  std::size_t row = 0;
  /// Original qubit label.
  std::size_t qubit = 0;

  bool operator==(const WireTag& other) const = default;
};

struct EncodingCircuit {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t b = 0;
  std::size_t r = 0;
  std::size_t r1 = 0;
  WireOrder order = WireOrder::kOriginal;
  std::vector<WireTag> wires;
  std::vector<std::size_t> perm;
  /// Trailing Pauli layer on the circuit's wires; identity when every
  /// standard-form sign is +1. Also present in `gates` as X_FIX/Z_FIX.
  PauliString fixup;
  std::vector<Gate> gates;

  std::size_t d() const { return b + r; }
  /// Wire carrying data bit i.
  std::size_t data_wire(std::size_t i) const;

  bool operator==(const EncodingCircuit& other) const = default;
};

struct SynthOptions {
  WireOrder order = WireOrder::kOriginal;
  /// Processing order of primary columns; empty means ascending.
  std::vector<std::size_t> primary_order;
};

/// Builds the encoder |c> (x) |0^d> -> codeword from a standard form.
///
/// Seeds are applied first, then each primary column j as R or Q on its
/// control wire immediately followed by the column's controlled Paulis,
/// then the sign fix-up layer.
EncodingCircuit synthesize(const StandardForm& sf, const SynthOptions& options = {});

/// Pauli (standard order) that anticommutes with exactly the standard-form
/// generators of sign -1 and commutes with every other generator and seed.
PauliString solve_sign_fixup(const StandardForm& sf);

/// Inverse circuit: gates reversed, each replaced by its inverse.
EncodingCircuit reverse(const EncodingCircuit& c);

/// Changes wire labelling between standard and original order.
EncodingCircuit relabel(const EncodingCircuit& c, WireOrder order);

struct GateCounts {
  std::size_t one_qubit = 0;
  std::size_t two_qubit = 0;
  std::size_t fixup = 0;
  /// one_qubit + two_qubit, the quantity bounded by n*d.
  std::size_t total = 0;
  std::size_t bound_two_qubit = 0;
  std::size_t bound_total = 0;

  bool two_qubit_within_bound() const { return two_qubit <= bound_two_qubit; }
  bool total_within_bound() const { return total <= bound_total; }
  bool within_bounds() const { return two_qubit_within_bound() && total_within_bound(); }
};

/// Gate counts and the bounds r1*k + (n-1)*b and n*d.
GateCounts count_report(const EncodingCircuit& c);

}  // namespace stabenc
