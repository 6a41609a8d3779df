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

#include "stabenc/standard_form.h"

#include <numeric>
#include <stdexcept>

namespace stabenc {

namespace {

BitMatrix permute_rows(const BitMatrix& m, const std::vector<std::size_t>& order) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(order[i], c)) out.set(i, c, true);
    }
  }
  return out;
}

BitMatrix permute_cols(const BitMatrix& m, const std::vector<std::size_t>& order) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i) out.set_column(i, m.column(order[i]));
  return out;
}

template <typename T>
std::vector<T> permute_vec(const std::vector<T>& v, const std::vector<std::size_t>& order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(v[i]);
  return out;
}

/// Elimination scratch state: generator columns with their signs, and the
/// original qubit carried by each row.
struct Tableau {
  BitMatrix x;
  BitMatrix z;
  std::vector<bool> negative;
  std::vector<std::size_t> row_label;

  // Generator dst <- dst * src.
  void multiply_into(std::size_t src, std::size_t dst) {
    const bool flip = z.column(dst).dot(x.column(src));
    negative[dst] = (negative[dst] != negative[src]) != flip;
    x.add_column(src, dst);
    z.add_column(src, dst);
  }

  void reorder_rows(const std::vector<std::size_t>& order) {
    x = permute_rows(x, order);
    z = permute_rows(z, order);
    row_label = permute_vec(row_label, order);
  }

  void reorder_cols(const std::vector<std::size_t>& order) {
    x = permute_cols(x, order);
    z = permute_cols(z, order);
    negative = permute_vec(negative, order);
  }
};

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Gauss-Jordan by column additions on `m` restricted to rows [0, nrows) and
// columns [0, ncols). Pivot rule: columns left to right, first unused row
// from the top. Each pivot clears its row in every other column.
std::vector<Pivot> eliminate(Tableau& t, const BitMatrix Tableau::*m, std::size_t nrows,
                             std::size_t ncols) {
  std::vector<Pivot> pivots;
  std::vector<bool> used(nrows, false);
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t p = 0;
    while (p < nrows && (used[p] || !(t.*m).get(p, c))) ++p;
    if (p == nrows) continue;
    used[p] = true;
    pivots.push_back({p, c});
    for (std::size_t j = 0; j < ncols; ++j) {
      if (j != c && (t.*m).get(p, j)) t.multiply_into(c, j);
    }
  }
  return pivots;
}

// Non-pivot indices in ascending order followed by pivot indices in pivot order.
std::vector<std::size_t> pivots_last(std::size_t count, const std::vector<std::size_t>& pivots) {
  std::vector<bool> is_pivot(count, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> order;
  order.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!is_pivot[i]) order.push_back(i);
  }
  order.insert(order.end(), pivots.begin(), pivots.end());
  return order;
}

}  // namespace

PauliString StandardForm::generator(std::size_t col) const {
  PauliString p(x_star.column(col), z_star.column(col), signs.at(col) < 0);
  return p;
}

PauliString StandardForm::seed(std::size_t i) const {
  return PauliString(x_seed.column(i), z_seed.column(i), false);
}

StandardForm compute_standard_form(const GeneratorSet& gs) {
  const std::size_t n = gs.n();
  const std::size_t d = gs.d();

  Tableau t{BitMatrix(n, d), BitMatrix(n, d), std::vector<bool>(d, false),
            std::vector<std::size_t>(n)};
  std::iota(t.row_label.begin(), t.row_label.end(), std::size_t{0});
  for (std::size_t i = 0; i < d; ++i) {
    t.x.set_column(i, gs[i].x());
    t.z.set_column(i, gs[i].z());
    t.negative[i] = gs[i].negative();
  }

  // Phase 1: reduce the X-matrix to [0 A; 0 I].
  const auto x_pivots = eliminate(t, &Tableau::x, n, d);
  const std::size_t b = x_pivots.size();
  const std::size_t r = d - b;
  const std::size_t k = n - d;
  {
    std::vector<std::size_t> rows, cols;
    for (const auto& p : x_pivots) {
      rows.push_back(p.row);
      cols.push_back(p.col);
    }
    t.reorder_rows(pivots_last(n, rows));
    t.reorder_cols(pivots_last(d, cols));
  }

  // Phase 2: reduce the top (r + k) x r block of the Z-matrix to [0 B1; 0 B2; 0 I].
  const std::size_t top = n - b;
  const auto z_pivots = eliminate(t, &Tableau::z, top, r);
  const std::size_t r1 = z_pivots.size();
  {
    std::vector<std::size_t> rows, cols;
    for (const auto& p : z_pivots) {
      rows.push_back(p.row);
      cols.push_back(p.col);
    }
    std::vector<std::size_t> row_order = pivots_last(top, rows);
    for (std::size_t i = top; i < n; ++i) row_order.push_back(i);
    std::vector<std::size_t> col_order = pivots_last(r, cols);
    for (std::size_t j = r; j < d; ++j) col_order.push_back(j);
    t.reorder_rows(row_order);
    t.reorder_cols(col_order);
  }

  StandardForm sf;
  sf.n = n;
  sf.d = d;
  sf.k = k;
  sf.b = b;
  sf.r = r;
  sf.r1 = r1;
  sf.r2 = r - r1;
  sf.x_star = std::move(t.x);
  sf.z_star = std::move(t.z);
  sf.perm = std::move(t.row_label);
  sf.signs.reserve(d);
  for (bool neg : t.negative) sf.signs.push_back(neg ? -1 : 1);

  // Seeds: identity on the data rows, B1 transposed on the r1 rows.
  sf.x_seed = BitMatrix(n, k);
  sf.z_seed = BitMatrix(n, k);
  const std::size_t r1_row0 = k + sf.r2;
  for (std::size_t i = 0; i < k; ++i) {
    sf.x_seed.set(i, i, true);
    for (std::size_t m = 0; m < r1; ++m) {
      if (sf.z_star.get(i, sf.r2 + m)) sf.x_seed.set(r1_row0 + m, i, true);
    }
  }
  return sf;
}

bool has_standard_shape(const StandardForm& sf) {
  const std::size_t n = sf.n, d = sf.d, k = sf.k, b = sf.b, r1 = sf.r1, r2 = sf.r2;
  if (d > n || k != n - d || sf.r != r1 + r2 || d != sf.r + b) return false;
  if (sf.x_star.rows() != n || sf.x_star.cols() != d) return false;
  if (sf.z_star.rows() != n || sf.z_star.cols() != d) return false;
  if (sf.x_seed.rows() != n || sf.x_seed.cols() != k) return false;
  if (sf.z_seed.rows() != n || sf.z_seed.cols() != k) return false;
  if (sf.signs.size() != d || sf.perm.size() != n) return false;

  std::vector<bool> seen(n, false);
  for (auto q : sf.perm) {
    if (q >= n || seen[q]) return false;
    seen[q] = true;
  }
  for (int s : sf.signs) {
    if (s != 1 && s != -1) return false;
  }

  const std::size_t r1_row0 = k + r2;
  const std::size_t bottom0 = n - b;
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < d; ++col) {
      const bool xv = sf.x_star.get(row, col);
      const bool zv = sf.z_star.get(row, col);
      if (col < r2) {
        if (xv) return false;
        if (zv && row < bottom0) return false;
      } else if (col < r2 + r1) {
        if (xv) return false;
        if (row >= r1_row0 && row < bottom0 && zv != (row - r1_row0 == col - r2)) return false;
      } else if (row >= bottom0) {
        if (xv != (row - bottom0 == col - r2 - r1)) return false;
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      bool expected = false;
      if (row < k) {
        expected = row == i;
      } else if (row >= r1_row0 && row < bottom0) {
        expected = sf.z_star.get(i, r2 + (row - r1_row0));
      }
      if (sf.x_seed.get(row, i) != expected) return false;
      if (sf.z_seed.get(row, i)) return false;
    }
  }
  return true;
}

StandardForm standard_form_from_augmented(const BitMatrix& x_full, const BitMatrix& z_full,
                                          std::size_t k, std::size_t r2, std::size_t r1,
                                          std::size_t b, std::vector<int> signs,
                                          std::vector<std::size_t> perm) {
  const std::size_t n = x_full.rows();
  if (x_full.cols() != n || z_full.rows() != n || z_full.cols() != n) {
    throw std::invalid_argument("augmented matrices must be n x n");
  }
  if (k + r2 + r1 + b != n) throw std::invalid_argument("block sizes do not sum to n");
  StandardForm sf;
  sf.n = n;
  sf.k = k;
  sf.r1 = r1;
  sf.r2 = r2;
  sf.r = r1 + r2;
  sf.b = b;
  sf.d = sf.r + b;
  sf.x_seed = x_full.block(0, 0, n, k);
  sf.z_seed = z_full.block(0, 0, n, k);
  sf.x_star = x_full.block(0, k, n, sf.d);
  sf.z_star = z_full.block(0, k, n, sf.d);
  sf.signs = signs.empty() ? std::vector<int>(sf.d, 1) : std::move(signs);
  if (perm.empty()) {
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
  }
  sf.perm = std::move(perm);
  if (!has_standard_shape(sf)) throw std::invalid_argument("matrices are not in standard form");
  return sf;
}

Classification classify(const StandardForm& sf) {
  Classification c;
  for (std::size_t col = 0; col < sf.r; ++col) c.secondary.push_back(sf.generator(col));
  for (std::size_t j = 0; j < sf.b; ++j) c.primary.push_back(sf.generator(sf.primary_col(j)));
  for (std::size_t i = 0; i < sf.k; ++i) c.seed.push_back(sf.seed(i));
  return c;
}

PauliString to_original_order(const StandardForm& sf, const PauliString& p) {
  return permute_qubits(p, sf.perm);
}

SeedReport verify_seed_conditions(const StandardForm& sf) {
  SeedReport report;
  BitMatrix stacked = sf.x_seed.hstack(sf.x_star.block(0, sf.r, sf.n, sf.b));
  report.seed_primary_rank = rank(stacked);
  report.independent = report.seed_primary_rank == sf.k + sf.b;
  report.commuting = true;
  for (std::size_t i = 0; i < sf.k && report.commuting; ++i) {
    const PauliString seed = sf.seed(i);
    for (std::size_t col = 0; col < sf.r; ++col) {
      if (!commutes(seed, sf.generator(col))) {
        report.commuting = false;
        report.anticommuting = std::make_pair(i, col);
        break;
      }
    }
  }
  return report;
}

std::optional<BitVector> group_membership(const GeneratorSet& gs, const PauliString& p) {
  if (p.size() != gs.n()) throw std::invalid_argument("group_membership: length mismatch");
  BitMatrix system(2 * gs.n(), gs.d());
  for (std::size_t i = 0; i < gs.d(); ++i) system.set_column(i, symplectic_vector(gs[i]));
  auto selection = solve(system, symplectic_vector(p));
  if (!selection) return std::nullopt;
  PauliString product(gs.n());
  for (std::size_t i = 0; i < gs.d(); ++i) {
    if (selection->get(i)) product = product * gs[i];
  }
  if (product != p) return std::nullopt;
  return selection;
}

}  // namespace stabenc
