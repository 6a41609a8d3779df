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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabenc {

/// Packed vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);
  bool operator[](std::size_t i) const { return get(i); }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  std::size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }

  /// Parity of the bitwise AND, i.e. the GF(2) dot product.
  bool dot(const BitVector& other) const;

  /// Least significant bit is index 0. Requires size() <= 64.
  std::uint64_t to_u64() const;
  static BitVector from_u64(std::uint64_t bits, std::size_t size);

  /// "0"/"1" characters, index 0 first.
  std::string to_string() const;

  bool operator==(const BitVector& other) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense bit matrix over GF(2).
///
/// Columns are stored as packed words so that the elimination primitive,
/// adding one column into another, is a word-wide XOR. Columns play the role
/// of generators and rows the role of qubits.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Builds a matrix from "0"/"1" row strings; all rows must have equal length.
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }

  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);
  bool operator()(std::size_t row, std::size_t col) const { return get(row, col); }

  const BitVector& column(std::size_t col) const;
  void set_column(std::size_t col, const BitVector& bits);
  BitVector row(std::size_t row) const;

  /// Column dst becomes dst XOR src.
  void add_column(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  BitMatrix transpose() const;
  /// Submatrix copy of rows [row0, row0+nrows) and columns [col0, col0+ncols).
  BitMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                  std::size_t ncols) const;
  /// Columns of *this followed by the columns of `right`.
  BitMatrix hstack(const BitMatrix& right) const;

  std::size_t popcount() const;
  bool is_zero() const;

  /// Rows joined by '\n', each row as "0"/"1" characters.
  std::string to_string() const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  void check_row(std::size_t row) const;
  void check_col(std::size_t col) const;

  std::size_t rows_ = 0;
  std::vector<BitVector> cols_;
};

/// Free-function forms of the elementary operations, returning a new matrix.
BitMatrix add_column(BitMatrix m, std::size_t src, std::size_t dst);
BitMatrix swap_rows(BitMatrix m, std::size_t a, std::size_t b);

/// GF(2) rank, computed on a scratch copy.
std::size_t rank(const BitMatrix& m);

/// Solves A x = rhs over GF(2). Free variables are set to zero, so the result
/// is deterministic. Returns nullopt when the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& rhs);

}  // namespace stabenc
