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

#include "stabenc/pauli.h"

namespace stabenc {

// Clifford conjugations P -> U P U^dagger acting in place, signs included.
void conjugate_h(PauliString& p, std::size_t q);
void conjugate_cnot(PauliString& p, std::size_t control, std::size_t target);
void conjugate_cz(PauliString& p, std::size_t a, std::size_t b);

/// Random valid generator set: Z on qubits 0..d-1 scrambled by `conjugations`
/// random H/CNOT/CZ conjugations (default 20*n). Deterministic in `seed` on
/// every platform. Throws std::invalid_argument if d > n.
GeneratorSet gen_random_code(std::size_t n, std::size_t d, std::uint64_t seed,
                             std::optional<std::size_t> conjugations = std::nullopt);

/// Copy of `gs` with each generator negated independently with probability 1/2.
GeneratorSet negate_random_signs(const GeneratorSet& gs, std::uint64_t seed);

}  // namespace stabenc
