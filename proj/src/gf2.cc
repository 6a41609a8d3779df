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

#include "stabenc/gf2.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace stabenc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

bool BitVector::get(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::uint64_t BitVector::to_u64() const {
  if (size_ > kWordBits) throw std::length_error("BitVector wider than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

BitVector BitVector::from_u64(std::uint64_t bits, std::size_t size) {
  if (size > kWordBits) throw std::length_error("BitVector wider than 64 bits");
  BitVector v(size);
  if (size == 0) return v;
  if (size < kWordBits) bits &= (std::uint64_t{1} << size) - 1;
  v.words_[0] = bits;
  return v;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols, BitVector(rows)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("ragged bit matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("bit matrix entries must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

void BitMatrix::check_row(std::size_t row) const {
  if (row >= rows_) throw std::out_of_range("BitMatrix row out of range");
}

void BitMatrix::check_col(std::size_t col) const {
  if (col >= cols_.size()) throw std::out_of_range("BitMatrix column out of range");
}

bool BitMatrix::get(std::size_t row, std::size_t col) const {
  check_row(row);
  check_col(col);
  return cols_[col].get(row);
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  check_row(row);
  check_col(col);
  cols_[col].set(row, value);
}

const BitVector& BitMatrix::column(std::size_t col) const {
  check_col(col);
  return cols_[col];
}

void BitMatrix::set_column(std::size_t col, const BitVector& bits) {
  check_col(col);
  if (bits.size() != rows_) throw std::invalid_argument("column length mismatch");
  cols_[col] = bits;
}

BitVector BitMatrix::row(std::size_t row) const {
  check_row(row);
  BitVector v(cols_.size());
  for (std::size_t c = 0; c < cols_.size(); ++c) v.set(c, cols_[c].get(row));
  return v;
}

void BitMatrix::add_column(std::size_t src, std::size_t dst) {
  check_col(src);
  check_col(dst);
  if (src == dst) throw std::invalid_argument("add_column requires distinct columns");
  cols_[dst] ^= cols_[src];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  check_row(a);
  check_row(b);
  if (a == b) return;
  for (auto& col : cols_) {
    const bool va = col.get(a);
    const bool vb = col.get(b);
    if (va != vb) {
      col.flip(a);
      col.flip(b);
    }
  }
}

void BitMatrix::swap_columns(std::size_t a, std::size_t b) {
  check_col(a);
  check_col(b);
  std::swap(cols_[a], cols_[b]);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (cols_[c].get(r)) t.set(c, r, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols()) {
    throw std::out_of_range("BitMatrix block out of range");
  }
  BitMatrix b(nrows, ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t r = 0; r < nrows; ++r) {
      if (cols_[col0 + c].get(row0 + r)) b.set(r, c, true);
    }
  }
  return b;
}

BitMatrix BitMatrix::hstack(const BitMatrix& right) const {
  if (right.rows_ != rows_) throw std::invalid_argument("hstack row count mismatch");
  BitMatrix out = *this;
  out.cols_.insert(out.cols_.end(), right.cols_.begin(), right.cols_.end());
  return out;
}

std::size_t BitMatrix::popcount() const {
  std::size_t total = 0;
  for (const auto& col : cols_) total += col.popcount();
  return total;
}

bool BitMatrix::is_zero() const {
  for (const auto& col : cols_) {
    if (col.any()) return false;
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += '\n';
    for (std::size_t c = 0; c < cols(); ++c) s += cols_[c].get(r) ? '1' : '0';
  }
  return s;
}

BitMatrix add_column(BitMatrix m, std::size_t src, std::size_t dst) {
  m.add_column(src, dst);
  return m;
}

BitMatrix swap_rows(BitMatrix m, std::size_t a, std::size_t b) {
  m.swap_rows(a, b);
  return m;
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix scratch = m;
  std::vector<bool> used(scratch.rows(), false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < scratch.cols(); ++c) {
    std::size_t pivot = scratch.rows();
    for (std::size_t row = 0; row < scratch.rows(); ++row) {
      if (!used[row] && scratch.get(row, c)) {
        pivot = row;
        break;
      }
    }
    if (pivot == scratch.rows()) continue;
    used[pivot] = true;
    ++r;
    for (std::size_t other = c + 1; other < scratch.cols(); ++other) {
      if (scratch.get(pivot, other)) scratch.add_column(c, other);
    }
  }
  return r;
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  // Row-reduce the augmented matrix [A | rhs], working on rows as packed vectors.
  const std::size_t nrows = a.rows();
  const std::size_t nvars = a.cols();
  std::vector<BitVector> rows;
  rows.reserve(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    BitVector row(nvars + 1);
    for (std::size_t c = 0; c < nvars; ++c) row.set(c, a.get(r, c));
    row.set(nvars, rhs.get(r));
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t next = 0;
  for (std::size_t c = 0; c < nvars && next < nrows; ++c) {
    std::size_t p = next;
    while (p < nrows && !rows[p].get(c)) ++p;
    if (p == nrows) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    pivot_col.push_back(c);
    ++next;
  }
  for (std::size_t r = next; r < nrows; ++r) {
    if (rows[r].get(nvars)) return std::nullopt;
  }
  BitVector x(nvars);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x.set(pivot_col[i], rows[i].get(nvars));
  return x;
}

}  // namespace stabenc
