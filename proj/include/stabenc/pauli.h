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
#include <vector>

#include "stabenc/gf2.h"

namespace stabenc {

/// Signed tensor product of I, X, Z, Y factors in symplectic form.
///
/// The operator is sign * prod_q X^x[q] Z^z[q], where within each qubit Z acts
/// first. Y is therefore the real matrix X*Z = [[0,-1],[1,0]], not the
/// Hermitian i*X*Z, and every operator in this library is real.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits with sign +1.
  explicit PauliString(std::size_t n);
  PauliString(BitVector x, BitVector z, bool negative = false);

  std::size_t size() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  BitVector& x() { return x_; }
  BitVector& z() { return z_; }

  bool negative() const { return negative_; }
  int sign() const { return negative_ ? -1 : 1; }
  void set_negative(bool negative) { negative_ = negative; }
  PauliString operator-() const;

  /// One of 'I', 'X', 'Z', 'Y'.
  char factor(std::size_t q) const;
  void set_factor(std::size_t q, char f);

  std::size_t y_count() const;
  std::size_t weight() const;
  bool is_identity() const { return x_.none() && z_.none(); }

  bool operator==(const PauliString& other) const = default;

 private:
  BitVector x_;
  BitVector z_;
  bool negative_ = false;
};

/// Parse failure; `column` is 1-based within the literal.
class PauliParseError : public std::invalid_argument {
 public:
  PauliParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses an optional '+'/'-' followed by one or more of I, X, Y, Z.
PauliString from_string(std::string_view text);
/// Canonical form: explicit sign followed by one character per qubit.
std::string to_string(const PauliString& p);

/// a * b as operators (b acts first).
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

/// Symplectic inner product x_a.z_b + z_a.x_b (mod 2); 0 iff a and b commute.
bool symplectic_product(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);
bool squares_to_plus_identity(const PauliString& a);

/// Concatenation x||z, the row used for independence checks.
BitVector symplectic_vector(const PauliString& p);

/// Reorders qubits: result factor at `perm[q]` is p's factor at q.
PauliString permute_qubits(const PauliString& p, const std::vector<std::size_t>& perm);

class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    kLengthMismatch,
    kAnticommutingPair,
    kNegativeSquare,
    kDependentGenerators,
    kTooManyGenerators,
  };

  ValidationError(Kind kind, std::size_t first, std::size_t second, const std::string& what)
      : std::runtime_error(what), kind_(kind), first_(first), second_(second) {}

  Kind kind() const { return kind_; }
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }
  /// Stable machine-readable tag, e.g. "AnticommutingPair(0,1)".
  std::string code() const;

 private:
  Kind kind_;
  std::size_t first_;
  std::size_t second_;
};

/// d independent, mutually commuting generators on n qubits, each squaring
/// to +I, with d <= n. Only obtainable through validate_generator_set.
class GeneratorSet {
 public:
  std::size_t n() const { return n_; }
  std::size_t d() const { return generators_.size(); }
  std::size_t k() const { return n_ - generators_.size(); }
  const std::vector<PauliString>& generators() const { return generators_; }
  const PauliString& operator[](std::size_t i) const { return generators_.at(i); }

 private:
  friend GeneratorSet validate_generator_set(std::size_t n, std::vector<PauliString> generators);
  GeneratorSet(std::size_t n, std::vector<PauliString> generators)
      : n_(n), generators_(std::move(generators)) {}

  std::size_t n_ = 0;
  std::vector<PauliString> generators_;
};

/// Throws ValidationError naming the first violated invariant.
GeneratorSet validate_generator_set(std::size_t n, std::vector<PauliString> generators);

}  // namespace stabenc
