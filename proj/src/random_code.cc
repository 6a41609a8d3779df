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


#include "stabenc/random_code.h"

#include <random>
#include <stdexcept>
#include <vector>

namespace stabenc {

// Factors are X^x Z^z per qubit. H maps XZ to ZX = -XZ; CZ moves a Z past an
// X on the partner qubit when both carry X; CNOT needs no sign change.

void conjugate_h(PauliString& p, std::size_t q) {
  const bool x = p.x().get(q);
  const bool z = p.z().get(q);
  if (x && z) p.set_negative(!p.negative());
  p.x().set(q, z);
  p.z().set(q, x);
}

void conjugate_cnot(PauliString& p, std::size_t control, std::size_t target) {
  if (control == target) throw std::invalid_argument("conjugate_cnot: control equals target");
  if (p.x().get(control)) p.x().flip(target);
  if (p.z().get(target)) p.z().flip(control);
}

void conjugate_cz(PauliString& p, std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("conjugate_cz: qubits must differ");
  const bool xa = p.x().get(a);
  const bool xb = p.x().get(b);
  if (xa && xb) p.set_negative(!p.negative());
  if (xb) p.z().flip(a);
  if (xa) p.z().flip(b);
}

// Distributions are not portable across standard libraries, so draws are
// reduced modulo directly.
GeneratorSet gen_random_code(std::size_t n, std::size_t d, std::uint64_t seed,
                             std::optional<std::size_t> conjugations) {
  if (d > n) throw std::invalid_argument("gen_random_code: d must not exceed n");
  std::vector<PauliString> gens;
  for (std::size_t i = 0; i < d; ++i) {
    PauliString p(n);
    p.z().set(i, true);
    gens.push_back(std::move(p));
  }
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t m) { return static_cast<std::size_t>(rng() % m); };
  const std::size_t steps = conjugations.value_or(20 * n);
  for (std::size_t s = 0; s < steps && n > 0; ++s) {
    const std::size_t kind = n > 1 ? pick(3) : 0;
    const std::size_t q1 = pick(n);
    std::size_t q2 = 0;
    if (kind != 0) {
      q2 = pick(n - 1);
      if (q2 >= q1) ++q2;
    }
    for (auto& g : gens) {
      if (kind == 0) {
        conjugate_h(g, q1);
      } else if (kind == 1) {
        conjugate_cnot(g, q1, q2);
      } else {
        conjugate_cz(g, q1, q2);
      }
    }
  }
  return validate_generator_set(n, std::move(gens));
}

GeneratorSet negate_random_signs(const GeneratorSet& gs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PauliString> gens = gs.generators();
  for (auto& g : gens) {
    if (rng() & 1) g = -g;
  }
  return validate_generator_set(gs.n(), std::move(gens));
}

}  // namespace stabenc
