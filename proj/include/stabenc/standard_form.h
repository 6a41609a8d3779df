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
#include <utility>
#include <vector>

#include "stabenc/gf2.h"
#include "stabenc/pauli.h"

namespace stabenc {

/// Which qubit labelling a circuit or state uses: the caller's original qubit
/// indices, or the row order produced by elimination.
enum class WireOrder { kOriginal, kStandard };

/// Generators normalized by two-phase GF(2) elimination, plus seeds.
///
/// Rows are qubits in elimination order; `perm[row]` is the original qubit.
/// The n x d generator matrices hold, left to right, r2 secondary columns,
/// r1 secondary columns and b primary columns. With row blocks of sizes
/// k, r2, r1, b (top to bottom) they have the shape
///
///   x_star = [0 0 A1; 0 0 A2; 0 0 A3; 0 0 I]
///   z_star = [0 B1 C1; 0 B2 C2; 0 I C3; D1 D2 E]
///
/// and the n x k seed matrices are x_seed = [I; 0; B1^T; 0], z_seed = 0.
struct StandardForm {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  std::size_t b = 0;
  std::size_t r = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  BitMatrix x_star;
  BitMatrix z_star;
  BitMatrix x_seed;
  BitMatrix z_seed;
  std::vector<std::size_t> perm;
  /// +1 or -1 per column of x_star/z_star.
  std::vector<int> signs;

  /// Row (and standard-order wire) carrying primary column j's control.
  std::size_t primary_row(std::size_t j) const { return n - b + j; }
  /// Column index within x_star/z_star of primary j.
  std::size_t primary_col(std::size_t j) const { return r + j; }

  /// Signed generator for column `col` of x_star/z_star, in standard order.
  PauliString generator(std::size_t col) const;
  /// Seed i in standard order (always sign +1).
  PauliString seed(std::size_t i) const;

  /// Augmented n x n matrices, seed columns first.
  BitMatrix x_full() const { return x_seed.hstack(x_star); }
  BitMatrix z_full() const { return z_seed.hstack(z_star); }
};

/// Runs both elimination phases and builds the seeds.
StandardForm compute_standard_form(const GeneratorSet& gs);

/// Wraps already-reduced augmented matrices (seed columns first, as printed
/// for the eight-qubit example) without recomputing anything. Throws
/// std::invalid_argument if the block shape does not hold.
StandardForm standard_form_from_augmented(const BitMatrix& x_full, const BitMatrix& z_full,
                                          std::size_t k, std::size_t r2, std::size_t r1,
                                          std::size_t b, std::vector<int> signs = {},
                                          std::vector<std::size_t> perm = {});

/// True iff every block of x_star, z_star, x_seed and z_seed has its required
/// shape and the dimensions are consistent.
bool has_standard_shape(const StandardForm& sf);

struct Classification {
  std::vector<PauliString> primary;
  std::vector<PauliString> secondary;
  std::vector<PauliString> seed;
};

/// Materializes primary (M), secondary (L) and seed (N) generators in
/// standard order, carrying tracked signs.
Classification classify(const StandardForm& sf);

/// Maps a standard-order operator to original qubit labels.
PauliString to_original_order(const StandardForm& sf, const PauliString& p);

struct SeedReport {
  std::size_t seed_primary_rank = 0;
  bool independent = false;
  bool commuting = false;
  /// First (seed, secondary) pair that anticommutes, if any.
  std::optional<std::pair<std::size_t, std::size_t>> anticommuting;

  bool ok() const { return independent && commuting; }
};

SeedReport verify_seed_conditions(const StandardForm& sf);

/// Subset of `gs` whose product equals `p` exactly (sign included), or nullopt
/// if `p` is not in the stabilizer group. Bit i selects generator i.
std::optional<BitVector> group_membership(const GeneratorSet& gs, const PauliString& p);

}  // namespace stabenc
