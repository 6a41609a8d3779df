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

#include "stabenc/pauli.h"

#include <sstream>

namespace stabenc {

PauliString::PauliString(std::size_t n) : x_(n), z_(n) {}

PauliString::PauliString(BitVector x, BitVector z, bool negative)
    : x_(std::move(x)), z_(std::move(z)), negative_(negative) {
  if (x_.size() != z_.size()) throw std::invalid_argument("PauliString x/z length mismatch");
}

PauliString PauliString::operator-() const {
  PauliString p = *this;
  p.negative_ = !p.negative_;
  return p;
}

char PauliString::factor(std::size_t q) const {
  const bool xb = x_.get(q);
  const bool zb = z_.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

void PauliString::set_factor(std::size_t q, char f) {
  switch (f) {
    case 'I': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true);  z_.set(q, false); break;
    case 'Z': x_.set(q, false); z_.set(q, true);  break;
    case 'Y': x_.set(q, true);  z_.set(q, true);  break;
    default: throw std::invalid_argument(std::string("invalid Pauli factor '") + f + "'");
  }
}

std::size_t PauliString::y_count() const { return (x_ & z_).popcount(); }

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < size(); ++q) {
    if (x_.get(q) || z_.get(q)) ++w;
  }
  return w;
}

PauliString from_string(std::string_view text) {
  bool negative = false;
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    start = 1;
  }
  if (start == text.size()) {
    throw PauliParseError("empty Pauli literal", start + 1);
  }
  PauliString p(text.size() - start);
  p.set_negative(negative);
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      std::ostringstream msg;
      msg << "invalid Pauli character '" << c << "' at column " << (i + 1);
      throw PauliParseError(msg.str(), i + 1);
    }
    p.set_factor(i - start, c);
  }
  return p;
}

std::string to_string(const PauliString& p) {
  std::string s;
  s.reserve(p.size() + 1);
  s += p.negative() ? '-' : '+';
  for (std::size_t q = 0; q < p.size(); ++q) s += p.factor(q);
  return s;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multiply: length mismatch");
  // Per qubit (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^(z1 x2) X^(x1+x2) Z^(z1+z2).
  const bool flip = a.z().dot(b.x());
  return PauliString(a.x() ^ b.x(), a.z() ^ b.z(), (a.negative() != b.negative()) != flip);
}

bool symplectic_product(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("commutes: length mismatch");
  return a.x().dot(b.z()) != a.z().dot(b.x());
}

bool commutes(const PauliString& a, const PauliString& b) { return !symplectic_product(a, b); }

bool squares_to_plus_identity(const PauliString& a) { return a.y_count() % 2 == 0; }

BitVector symplectic_vector(const PauliString& p) {
  const std::size_t n = p.size();
  BitVector v(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    v.set(q, p.x().get(q));
    v.set(n + q, p.z().get(q));
  }
  return v;
}

PauliString permute_qubits(const PauliString& p, const std::vector<std::size_t>& perm) {
  if (perm.size() != p.size()) throw std::invalid_argument("permute_qubits: length mismatch");
  PauliString out(p.size());
  out.set_negative(p.negative());
  for (std::size_t q = 0; q < p.size(); ++q) {
    out.x().set(perm[q], p.x().get(q));
    out.z().set(perm[q], p.z().get(q));
  }
  return out;
}

std::string ValidationError::code() const {
  std::ostringstream s;
  switch (kind_) {
    case Kind::kLengthMismatch: s << "LengthMismatch(" << first_ << ")"; break;
    case Kind::kAnticommutingPair: s << "AnticommutingPair(" << first_ << "," << second_ << ")"; break;
    case Kind::kNegativeSquare: s << "NegativeSquare(" << first_ << ")"; break;
    case Kind::kDependentGenerators: s << "DependentGenerators(" << first_ << ")"; break;
    case Kind::kTooManyGenerators: s << "TooManyGenerators(" << first_ << "," << second_ << ")"; break;
  }
  return s.str();
}

GeneratorSet validate_generator_set(std::size_t n, std::vector<PauliString> generators) {
  using Kind = ValidationError::Kind;
  const std::size_t d = generators.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (generators[i].size() != n) {
      std::ostringstream msg;
      msg << "generator " << i << " has length " << generators[i].size() << ", expected " << n;
      throw ValidationError(Kind::kLengthMismatch, i, 0, msg.str());
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!squares_to_plus_identity(generators[i])) {
      std::ostringstream msg;
      msg << "generator " << i << " squares to -I (odd number of Y factors)";
      throw ValidationError(Kind::kNegativeSquare, i, 0, msg.str());
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!commutes(generators[i], generators[j])) {
        std::ostringstream msg;
        msg << "generators " << i << " and " << j << " anticommute";
        throw ValidationError(Kind::kAnticommutingPair, i, j, msg.str());
      }
    }
  }
  // Rows of the d x 2n matrix (x||z) are the columns of this 2n x d matrix.
  BitMatrix stacked(2 * n, d);
  for (std::size_t i = 0; i < d; ++i) stacked.set_column(i, symplectic_vector(generators[i]));
  const std::size_t r = rank(stacked);
  if (r < d) {
    std::ostringstream msg;
    msg << "generators are dependent (rank " << r << " < " << d << ")";
    throw ValidationError(Kind::kDependentGenerators, r, d, msg.str());
  }
  if (d > n) {
    std::ostringstream msg;
    msg << d << " generators on " << n << " qubits";
    throw ValidationError(Kind::kTooManyGenerators, d, n, msg.str());
  }
  return GeneratorSet(n, std::move(generators));
}

}  // namespace stabenc
