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

#include <random>

#include <gtest/gtest.h>

#include "stabenc/random_code.h"
#include "test_util.h"

namespace stabenc {
namespace {

// All 2^d signed products of the generators, keyed by symplectic vector.
std::vector<PauliString> group_elements(const std::vector<PauliString>& gens, std::size_t n) {
  std::vector<PauliString> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    PauliString p(n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((mask >> i) & 1) p = p * gens[i];
    }
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const PauliString& a, const PauliString& b) {
    return to_string(a) < to_string(b);
  });
  return out;
}

TEST(StandardForm, EightQubitParameters) {
  const auto sf = compute_standard_form(testing::eight_qubit_code());
  EXPECT_EQ(sf.k, 3u);
  EXPECT_EQ(sf.r1, 1u);
  EXPECT_EQ(sf.r2, 0u);
  EXPECT_EQ(sf.b, 4u);
  EXPECT_TRUE(has_standard_shape(sf));
}

TEST(StandardForm, InjectedEightQubitShape) {
  const auto sf = testing::eight_qubit_injected();
  EXPECT_TRUE(has_standard_shape(sf));
  const auto cls = classify(sf);
  ASSERT_EQ(cls.seed.size(), 3u);
  EXPECT_EQ(to_string(cls.seed[0]), "+XIIXIIII");
  ASSERT_EQ(cls.secondary.size(), 1u);
  EXPECT_EQ(to_string(cls.secondary[0]), "+ZZZZZZZZ");
}

TEST(StandardForm, SingleZZ) {
  const auto sf = compute_standard_form(testing::make_code({"ZZ"}));
  EXPECT_EQ(sf.k, 1u);
  EXPECT_EQ(sf.b, 0u);
  EXPECT_EQ(sf.r, 1u);
  ASSERT_EQ(sf.k, 1u);
  EXPECT_EQ(to_original_order(sf, sf.seed(0)), from_string("XX"));
}

TEST(StandardForm, IdentityCode) {
  const auto gs = validate_generator_set(4, {});
  const auto sf = compute_standard_form(gs);
  EXPECT_EQ(sf.k, 4u);
  EXPECT_EQ(sf.d, 0u);
  EXPECT_TRUE(has_standard_shape(sf));
}

TEST(StandardForm, RejectsBrokenShape) {
  auto x = BitMatrix::from_rows({"10", "01"});
  auto z = BitMatrix::from_rows({"00", "00"});
  EXPECT_NO_THROW(standard_form_from_augmented(x, z, 1, 0, 0, 1));
  z.set(1, 0, true);  // seed column must have no Z part
  EXPECT_THROW(standard_form_from_augmented(x, z, 1, 0, 0, 1), std::invalid_argument);
}

TEST(StandardForm, ShapeHoldsOnRandomCodes) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const std::size_t d = seed % (n + 1);
    const auto gs = gen_random_code(n, d, seed);
    const auto sf = compute_standard_form(gs);
    ASSERT_TRUE(has_standard_shape(sf)) << "seed " << seed;
    EXPECT_EQ(sf.k + sf.r1 + sf.r2 + sf.b, n);
    EXPECT_LE(sf.x_star.popcount() + sf.z_star.popcount(), 2 * n * d);
    EXPECT_TRUE(verify_seed_conditions(sf).ok()) << "seed " << seed;
  }
}

TEST(StandardForm, PreservesGroupExactly) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const std::size_t d = (seed / 6) % (n + 1);
    auto gs = negate_random_signs(gen_random_code(n, d, seed), seed + 1000);
    const auto sf = compute_standard_form(gs);
    std::vector<PauliString> reduced;
    for (std::size_t col = 0; col < sf.d; ++col) reduced.push_back(to_original_order(sf, sf.generator(col)));
    EXPECT_EQ(group_elements(reduced, n), group_elements(gs.generators(), n)) << "seed " << seed;
    for (const auto& g : reduced) {
      const auto subset = group_membership(gs, g);
      ASSERT_TRUE(subset.has_value());
    }
  }
}

TEST(StandardForm, MembershipRejectsWrongSign) {
  const auto gs = testing::make_code({"ZZ"});
  EXPECT_TRUE(group_membership(gs, from_string("ZZ")).has_value());
  EXPECT_FALSE(group_membership(gs, from_string("-ZZ")).has_value());
  EXPECT_FALSE(group_membership(gs, from_string("XX")).has_value());
}

TEST(StandardForm, SignsTrackMultiplication) {
  // Reduced generators are signed members of the original group.
  const auto gs = testing::make_code({"-ZZ", "XX"});
  const auto sf = compute_standard_form(gs);
  for (std::size_t col = 0; col < sf.d; ++col) {
    EXPECT_TRUE(group_membership(gs, to_original_order(sf, sf.generator(col))).has_value());
  }
}

TEST(SeedConditions, HoldForEightQubitCode) {
  const auto report = verify_seed_conditions(testing::eight_qubit_injected());
  EXPECT_TRUE(report.independent);
  EXPECT_TRUE(report.commuting);
  EXPECT_EQ(report.seed_primary_rank, 7u);
}

TEST(SeedConditions, MutatedSeedFails) {
  auto sf = testing::eight_qubit_injected();
  // Dropping the B1^T entry of seed 0 makes it anticommute with the secondary.
  sf.x_seed.set(3, 0, false);
  const auto report = verify_seed_conditions(sf);
  EXPECT_FALSE(report.commuting);
  ASSERT_TRUE(report.anticommuting.has_value());
  EXPECT_EQ(report.anticommuting->first, 0u);
  EXPECT_FALSE(report.ok());
}

}  // namespace
}  // namespace stabenc
