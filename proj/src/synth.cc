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

#include "stabenc/synth.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace stabenc {

namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  bool two_qubit;
  GateKind inverse;
};

constexpr std::array<GateInfo, 10> kGates = {{
    {GateKind::kQ, "Q", false, GateKind::kQ},
    {GateKind::kR, "R", false, GateKind::kRInv},
    {GateKind::kZ, "Z", false, GateKind::kZ},
    {GateKind::kCX, "CX", true, GateKind::kCX},
    {GateKind::kCY, "CY", true, GateKind::kCYInv},
    {GateKind::kCZ, "CZ", true, GateKind::kCZ},
    {GateKind::kRInv, "R_INV", false, GateKind::kR},
    {GateKind::kCYInv, "CY_INV", true, GateKind::kCY},
    {GateKind::kXFix, "X_FIX", false, GateKind::kXFix},
    {GateKind::kZFix, "Z_FIX", false, GateKind::kZFix},
}};

const GateInfo& info(GateKind kind) {
  for (const auto& g : kGates) {
    if (g.kind == kind) return g;
  }
  throw std::logic_error("unknown gate kind");
}

bool is_fixup(GateKind kind) { return kind == GateKind::kXFix || kind == GateKind::kZFix; }

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& g : kGates) {
    if (g.name == name) return g.kind;
  }
  return std::nullopt;
}

bool is_two_qubit(GateKind kind) { return info(kind).two_qubit; }

GateKind inverse(GateKind kind) { return info(kind).inverse; }

std::size_t EncodingCircuit::data_wire(std::size_t i) const {
  for (std::size_t w = 0; w < wires.size(); ++w) {
    if (wires[w].role == WireRole::kData && wires[w].index == i) return w;
  }
  throw std::out_of_range("no wire carries the requested data bit");
}

PauliString solve_sign_fixup(const StandardForm& sf) {
  const std::size_t n = sf.n;
  // Unknown P = (u | w) with x-bits u and z-bits w. For each operator g the
  // symplectic product is u.z_g + w.x_g.
  BitMatrix system(n, 2 * n);
  BitVector rhs(n);
  std::size_t row = 0;
  auto add_constraint = [&](const PauliString& g, bool anticommute) {
    for (std::size_t q = 0; q < n; ++q) {
      system.set(row, q, g.z().get(q));
      system.set(row, n + q, g.x().get(q));
    }
    rhs.set(row, anticommute);
    ++row;
  };
  for (std::size_t col = 0; col < sf.d; ++col) add_constraint(sf.generator(col), sf.signs[col] < 0);
  for (std::size_t i = 0; i < sf.k; ++i) add_constraint(sf.seed(i), false);

  auto solution = solve(system, rhs);
  if (!solution) throw std::logic_error("sign fix-up system is unsolvable; generators not independent");
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.x().set(q, solution->get(q));
    p.z().set(q, solution->get(n + q));
  }
  return p;
}

EncodingCircuit synthesize(const StandardForm& sf, const SynthOptions& options) {
  const std::size_t n = sf.n;
  EncodingCircuit c;
  c.n = n;
  c.k = sf.k;
  c.b = sf.b;
  c.r = sf.r;
  c.r1 = sf.r1;
  c.order = WireOrder::kStandard;
  c.perm = sf.perm;
  c.wires.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    WireTag& tag = c.wires[w];
    if (w < sf.k) {
      tag.role = WireRole::kData;
      tag.index = w;
    } else if (w < n - sf.b) {
      tag.role = WireRole::kZero;
      tag.index = w - sf.k;
    } else {
      tag.role = WireRole::kPrimary;
      tag.index = w - (n - sf.b);
    }
    tag.row = w;
    tag.qubit = sf.perm[w];
  }

  // Seeds have no Z part, so each is a fan of CX gates from its data wire.
  for (std::size_t i = 0; i < sf.k; ++i) {
    for (std::size_t q = 0; q < n; ++q) {
      if (q != i && sf.x_seed.get(q, i)) c.gates.push_back(Gate::controlled(GateKind::kCX, i, q));
    }
  }

  std::vector<std::size_t> primary_order = options.primary_order;
  if (primary_order.empty()) {
    primary_order.resize(sf.b);
    std::iota(primary_order.begin(), primary_order.end(), std::size_t{0});
  } else {
    auto sorted = primary_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (sorted[j] != j || sorted.size() != sf.b) {
        throw std::invalid_argument("primary_order must be a permutation of the primary columns");
      }
    }
  }

  // A primary wire is put into superposition right before its own column, so
  // Z entries of earlier columns on it act on |0> and contribute no phase.
  for (std::size_t j : primary_order) {
    const std::size_t w = sf.primary_row(j);
    const std::size_t col = sf.primary_col(j);
    c.gates.push_back(Gate::single(sf.z_star.get(w, col) ? GateKind::kR : GateKind::kQ, w));
    for (std::size_t q = 0; q < n; ++q) {
      if (q == w) continue;
      const bool xb = sf.x_star.get(q, col);
      const bool zb = sf.z_star.get(q, col);
      if (xb && zb) {
        c.gates.push_back(Gate::controlled(GateKind::kCY, w, q));
      } else if (xb) {
        c.gates.push_back(Gate::controlled(GateKind::kCX, w, q));
      } else if (zb) {
        c.gates.push_back(Gate::controlled(GateKind::kCZ, w, q));
      }
    }
  }

  c.fixup = solve_sign_fixup(sf);
  for (std::size_t q = 0; q < n; ++q) {
    if (c.fixup.z().get(q)) c.gates.push_back(Gate::single(GateKind::kZFix, q));
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (c.fixup.x().get(q)) c.gates.push_back(Gate::single(GateKind::kXFix, q));
  }

  return relabel(c, options.order);
}

EncodingCircuit relabel(const EncodingCircuit& c, WireOrder order) {
  if (c.order == order) return c;
  const std::size_t n = c.n;
  // new_wire[w] is the label wire w receives.
  std::vector<std::size_t> new_wire(n);
  for (std::size_t w = 0; w < n; ++w) {
    new_wire[w] = order == WireOrder::kOriginal ? c.wires[w].qubit : c.wires[w].row;
  }
  EncodingCircuit out = c;
  out.order = order;
  for (std::size_t w = 0; w < n; ++w) out.wires[new_wire[w]] = c.wires[w];
  out.fixup = permute_qubits(c.fixup, new_wire);
  for (auto& g : out.gates) {
    if (g.control) g.control = new_wire[*g.control];
    g.target = new_wire[g.target];
  }
  return out;
}

EncodingCircuit reverse(const EncodingCircuit& c) {
  EncodingCircuit out = c;
  std::reverse(out.gates.begin(), out.gates.end());
  for (auto& g : out.gates) g.kind = inverse(g.kind);
  return out;
}

GateCounts count_report(const EncodingCircuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates) {
    if (is_fixup(g.kind)) {
      ++counts.fixup;
    } else if (is_two_qubit(g.kind)) {
      ++counts.two_qubit;
    } else {
      ++counts.one_qubit;
    }
  }
  counts.total = counts.one_qubit + counts.two_qubit;
  counts.bound_two_qubit = c.r1 * c.k + (c.n > 0 ? (c.n - 1) * c.b : 0);
  counts.bound_total = c.n * c.d();
  return counts;
}

}  // namespace stabenc
