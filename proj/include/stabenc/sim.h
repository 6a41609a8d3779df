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

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabenc/pauli.h"
#include "stabenc/standard_form.h"
#include "stabenc/synth.h"

namespace stabenc {

/// Largest qubit count the dense simulator accepts unless overridden.
inline constexpr std::size_t kDefaultSimCap = 20;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("state vector on " + std::to_string(n) + " qubits exceeds simulator cap of " +
                           std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  std::size_t n() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

inline void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 62) throw CapExceeded(n, cap);
}

/// Bit of a basis index holding qubit q. Qubit 0 is the most significant bit,
/// so the binary spelling of an index reads q0 q1 ... left to right.
inline std::uint64_t qubit_mask(std::size_t n, std::size_t q) {
  return std::uint64_t{1} << (n - 1 - q);
}

inline std::uint64_t basis_index(const BitVector& bits) {
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits.get(q)) index |= qubit_mask(bits.size(), q);
  }
  return index;
}

inline std::string basis_label(std::uint64_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q) {
    if (index & qubit_mask(n, q)) s[q] = '1';
  }
  return s;
}

/// Dense real state vector of length 2^n.
template <typename Scalar>
class BasicStateVector {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicStateVector() = default;
  explicit BasicStateVector(std::size_t n, std::size_t cap = kDefaultSimCap) : n_(n) {
    check_cap(n, cap);
    amps_ = Vector::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << n));
  }

  static BasicStateVector basis(std::size_t n, std::uint64_t index,
                                std::size_t cap = kDefaultSimCap) {
    BasicStateVector s(n, cap);
    s.amps_(static_cast<Eigen::Index>(index)) = Scalar(1);
    return s;
  }
  static BasicStateVector basis(const BitVector& bits, std::size_t cap = kDefaultSimCap) {
    return basis(bits.size(), basis_index(bits), cap);
  }

  std::size_t num_qubits() const { return n_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << n_; }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }
  Scalar operator[](std::uint64_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
  Scalar& operator[](std::uint64_t i) { return amps_(static_cast<Eigen::Index>(i)); }

  Scalar norm() const { return amps_.norm(); }

 private:
  std::size_t n_ = 0;
  Vector amps_;
};

using StateVector = BasicStateVector<double>;

template <typename Scalar>
Scalar inner_product(const BasicStateVector<Scalar>& a, const BasicStateVector<Scalar>& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner_product: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

template <typename Scalar>
Scalar max_abs_difference(const BasicStateVector<Scalar>& a, const BasicStateVector<Scalar>& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("dimension mismatch");
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

/// Applies one gate in place.
template <typename Scalar>
void apply_gate(BasicStateVector<Scalar>& s, const Gate& g) {
  const std::size_t n = s.num_qubits();
  if (g.target >= n || (g.control && *g.control >= n)) {
    throw std::invalid_argument("gate wire out of range");
  }
  const std::uint64_t dim = s.dimension();
  const std::uint64_t t = qubit_mask(n, g.target);
  const std::uint64_t c = g.control ? qubit_mask(n, *g.control) : 0;
  const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
  auto& v = s.amplitudes();

  auto for_pairs = [&](auto&& fn) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & t) || (i & c) != c) continue;
      fn(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i | t));
    }
  };

  switch (g.kind) {
    case GateKind::kQ:
      for_pairs([&](auto i0, auto i1) {
        const Scalar a0 = v(i0), a1 = v(i1);
        v(i0) = h * (a0 + a1);
        v(i1) = h * (a0 - a1);
      });
      break;
    case GateKind::kR:  // Q * Z
      for_pairs([&](auto i0, auto i1) {
        const Scalar a0 = v(i0), a1 = -v(i1);
        v(i0) = h * (a0 + a1);
        v(i1) = h * (a0 - a1);
      });
      break;
    case GateKind::kRInv:  // Z * Q
      for_pairs([&](auto i0, auto i1) {
        const Scalar a0 = v(i0), a1 = v(i1);
        v(i0) = h * (a0 + a1);
        v(i1) = -h * (a0 - a1);
      });
      break;
    case GateKind::kZ:
    case GateKind::kZFix:
    case GateKind::kCZ:
      for_pairs([&](auto, auto i1) { v(i1) = -v(i1); });
      break;
    case GateKind::kXFix:
    case GateKind::kCX:
      for_pairs([&](auto i0, auto i1) { std::swap(v(i0), v(i1)); });
      break;
    case GateKind::kCY:  // X*Z: |0> -> |1>, |1> -> -|0>
      for_pairs([&](auto i0, auto i1) {
        const Scalar a0 = v(i0), a1 = v(i1);
        v(i0) = -a1;
        v(i1) = a0;
      });
      break;
    case GateKind::kCYInv:  // Z*X: |0> -> -|1>, |1> -> |0>
      for_pairs([&](auto i0, auto i1) {
        const Scalar a0 = v(i0), a1 = v(i1);
        v(i0) = a1;
        v(i1) = -a0;
      });
      break;
  }
}

template <typename Scalar>
BasicStateVector<Scalar> apply_circuit(BasicStateVector<Scalar> s, const EncodingCircuit& c,
                                       std::size_t cap = kDefaultSimCap) {
  if (s.num_qubits() != c.n) throw std::invalid_argument("apply_circuit: dimension mismatch");
  check_cap(c.n, cap);
  for (const auto& g : c.gates) apply_gate(s, g);
  return s;
}

/// Multiplies by the signed tensor-product matrix of p.
template <typename Scalar>
BasicStateVector<Scalar> apply_pauli(const BasicStateVector<Scalar>& s, const PauliString& p) {
  const std::size_t n = s.num_qubits();
  if (p.size() != n) throw std::invalid_argument("apply_pauli: dimension mismatch");
  const std::uint64_t xm = basis_index(p.x());
  const std::uint64_t zm = basis_index(p.z());
  BasicStateVector<Scalar> out(n, 62);
  const auto& in = s.amplitudes();
  auto& o = out.amplitudes();
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    const bool odd = (std::popcount(i & zm) & 1) != p.negative();
    o(static_cast<Eigen::Index>(i ^ xm)) = odd ? -in(static_cast<Eigen::Index>(i)) : in(static_cast<Eigen::Index>(i));
  }
  return out;
}

/// Signed basis ket, used by the sparse codeword expansion.
struct SignedKet {
  std::uint64_t index = 0;
  bool negative = false;
};

/// p |index>, computed without touching a dense vector.
inline SignedKet apply_pauli(const SignedKet& ket, const PauliString& p) {
  const std::uint64_t xm = basis_index(p.x());
  const std::uint64_t zm = basis_index(p.z());
  const bool odd = (std::popcount(ket.index & zm) & 1) != 0;
  return {ket.index ^ xm, (ket.negative != odd) != p.negative()};
}

namespace detail {

struct OracleTerms {
  std::vector<PauliString> primary;
  std::vector<PauliString> seed;
  BitVector reference;
};

inline OracleTerms oracle_terms(const StandardForm& sf, const BitVector& data,
                                const BitVector& reference, WireOrder order) {
  if (data.size() != sf.k) throw std::invalid_argument("data length must equal k");
  if (!reference.empty() && reference.size() != sf.n) {
    throw std::invalid_argument("reference state length must equal n");
  }
  const Classification cls = classify(sf);
  OracleTerms t;
  t.reference = reference.empty() ? BitVector(sf.n) : reference;
  auto place = [&](const PauliString& p) {
    return order == WireOrder::kOriginal ? to_original_order(sf, p) : p;
  };
  for (const auto& m : cls.primary) t.primary.push_back(place(m));
  for (std::size_t i = 0; i < sf.k; ++i) {
    if (data.get(i)) t.seed.push_back(place(cls.seed[i]));
  }
  if (order == WireOrder::kOriginal) {
    PauliString ref(t.reference, BitVector(sf.n));
    t.reference = to_original_order(sf, ref).x();
  }
  return t;
}

}  // namespace detail

/// Codeword as the explicit sum over a in {0,1}^b of
///   M_1^a_1 ... M_b^a_b N_1^c_1 ... N_k^c_k |reference>
/// scaled by 2^(-b/2), with M the signed primary generators and N the seeds.
/// `reference` is in standard order (empty means all zeros); pass the X part
/// of the sign fix-up to match a synthesized circuit.
template <typename Scalar = double>
BasicStateVector<Scalar> encode_oracle(const StandardForm& sf, const BitVector& data,
                                       const BitVector& reference = {},
                                       WireOrder order = WireOrder::kOriginal,
                                       std::size_t cap = kDefaultSimCap) {
  check_cap(sf.n, cap);
  const auto t = detail::oracle_terms(sf, data, reference, order);
  SignedKet start{basis_index(t.reference), false};
  for (auto it = t.seed.rbegin(); it != t.seed.rend(); ++it) start = apply_pauli(start, *it);

  BasicStateVector<Scalar> out(sf.n, cap);
  const Scalar amp = std::pow(Scalar(2), -Scalar(sf.b) / 2);
  const std::uint64_t terms = std::uint64_t{1} << sf.b;
  for (std::uint64_t a = 0; a < terms; ++a) {
    SignedKet ket = start;
    for (std::size_t j = sf.b; j-- > 0;) {
      if ((a >> j) & 1) ket = apply_pauli(ket, t.primary[j]);
    }
    out[ket.index] += ket.negative ? -amp : amp;
  }
  return out;
}

/// Same codeword via (I + M_1) ... (I + M_b) N^c |reference> / 2^(b/2),
/// evaluated with dense operator applications.
template <typename Scalar = double>
BasicStateVector<Scalar> encode_projector_oracle(const StandardForm& sf, const BitVector& data,
                                                 const BitVector& reference = {},
                                                 WireOrder order = WireOrder::kOriginal,
                                                 std::size_t cap = kDefaultSimCap) {
  check_cap(sf.n, cap);
  const auto t = detail::oracle_terms(sf, data, reference, order);
  auto state = BasicStateVector<Scalar>::basis(t.reference, cap);
  for (auto it = t.seed.rbegin(); it != t.seed.rend(); ++it) state = apply_pauli(state, *it);
  for (std::size_t j = sf.b; j-- > 0;) {
    auto moved = apply_pauli(state, t.primary[j]);
    state.amplitudes() += moved.amplitudes();
  }
  state.amplitudes() *= std::pow(Scalar(2), -Scalar(sf.b) / 2);
  return state;
}

struct CodewordReport {
  /// ||G s - s|| per generator, sign included.
  std::vector<double> residuals;
  double max_residual = 0.0;
};

template <typename Scalar>
CodewordReport check_codeword(const BasicStateVector<Scalar>& s, const std::vector<PauliString>& generators) {
  CodewordReport report;
  for (const auto& g : generators) {
    const auto moved = apply_pauli(s, g);
    const double r = static_cast<double>((moved.amplitudes() - s.amplitudes()).norm());
    report.residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

template <typename Scalar>
CodewordReport check_codeword(const BasicStateVector<Scalar>& s, const GeneratorSet& gs) {
  if (gs.n() != s.num_qubits()) throw std::invalid_argument("check_codeword: dimension mismatch");
  return check_codeword(s, gs.generators());
}

/// Relabels qubits: qubit q of `s` becomes qubit perm[q] of the result.
template <typename Scalar>
BasicStateVector<Scalar> permute_qubits(const BasicStateVector<Scalar>& s, const std::vector<std::size_t>& perm) {
  const std::size_t n = s.num_qubits();
  if (perm.size() != n) throw std::invalid_argument("permute_qubits: permutation length mismatch");
  BasicStateVector<Scalar> out(n, n);
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    std::uint64_t j = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (i & qubit_mask(n, q)) j |= qubit_mask(n, perm[q]);
    }
    out[j] = s[i];
  }
  return out;
}

/// Input basis state |c> (x) |0^d> on the circuit's wires.
inline std::uint64_t input_index(const EncodingCircuit& c, const BitVector& data) {
  if (data.size() != c.k) throw std::invalid_argument("data length must equal k");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < c.k; ++i) {
    if (data.get(i)) index |= qubit_mask(c.n, c.data_wire(i));
  }
  return index;
}

}  // namespace stabenc
