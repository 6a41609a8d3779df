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

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace stabenc {
namespace {

using testing::all_paulis;
using testing::pauli_matrix;

TEST(PauliString, ParseExample) {
  const auto p = from_string("XIXIZYZY");
  EXPECT_EQ(p.x(), BitVector::from_u64(0b10100101, 8));
  EXPECT_EQ(p.x().to_string(), "10100101");
  EXPECT_EQ(p.z().to_string(), "00001111");
  EXPECT_EQ(p.sign(), 1);
}

TEST(PauliString, ParseSign) {
  EXPECT_EQ(from_string("-Z").sign(), -1);
  EXPECT_EQ(from_string("+Z").sign(), 1);
  EXPECT_EQ(to_string(from_string("Y")), "+Y");
}

TEST(PauliString, ParseErrorsCarryColumn) {
  try {
    from_string("XQX");
    FAIL() << "expected a parse error";
  } catch (const PauliParseError& e) {
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(from_string(""), PauliParseError);
  EXPECT_THROW(from_string("-"), PauliParseError);
}

TEST(PauliString, RoundTripAllShortStrings) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : all_paulis(n)) {
      EXPECT_EQ(from_string(to_string(p)), p);
      EXPECT_EQ(from_string(to_string(-p)), -p);
    }
  }
}

TEST(PauliString, MultiplyExamples) {
  // X * Z as operators is the real Y.
  EXPECT_EQ(from_string("X") * from_string("Z"), from_string("Y"));
  EXPECT_EQ(from_string("Z") * from_string("X"), from_string("-Y"));
  EXPECT_EQ(from_string("Y") * from_string("Y"), from_string("-I"));
  EXPECT_EQ(from_string("XX") * from_string("ZZ"), from_string("YY"));
}

TEST(PauliString, MultiplyMatchesMatrixProduct) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto ps = all_paulis(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        for (bool neg : {false, true}) {
          const PauliString sa = neg ? -a : a;
          const Eigen::MatrixXd expected = pauli_matrix(sa) * pauli_matrix(b);
          EXPECT_TRUE(pauli_matrix(sa * b).isApprox(expected)) << to_string(sa) << " * " << to_string(b);
        }
      }
    }
  }
}

TEST(PauliString, MultiplyIsAssociative) {
  std::mt19937_64 rng(3);
  const auto ps = all_paulis(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& a = ps[rng() % ps.size()];
    const auto& b = ps[rng() % ps.size()];
    const auto& c = ps[rng() % ps.size()];
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(PauliString, CommutesMatchesMatrices) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto ps = all_paulis(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        const Eigen::MatrixXd ma = pauli_matrix(a), mb = pauli_matrix(b);
        EXPECT_EQ(commutes(a, b), (ma * mb).isApprox(mb * ma));
      }
    }
  }
}

TEST(PauliString, CommuteExamples) {
  EXPECT_TRUE(commutes(from_string("XXXXXXXX"), from_string("ZZZZZZZZ")));
  EXPECT_FALSE(commutes(from_string("XI"), from_string("ZI")));
  EXPECT_TRUE(commutes(from_string("XX"), from_string("ZZ")));
}

TEST(PauliString, SquareSign) {
  EXPECT_TRUE(squares_to_plus_identity(from_string("XIXIZYZY")));
  EXPECT_FALSE(squares_to_plus_identity(from_string("Y")));
  for (const auto& p : all_paulis(2)) {
    const Eigen::MatrixXd m = pauli_matrix(p);
    EXPECT_EQ(squares_to_plus_identity(p), (m * m).isApprox(Eigen::MatrixXd::Identity(4, 4)));
  }
}

TEST(PauliString, PermuteQubits) {
  const auto p = from_string("-XYZ");
  EXPECT_EQ(permute_qubits(p, {2, 0, 1}), from_string("-YZX"));
}

TEST(Validate, EightQubitCode) {
  const auto gs = testing::eight_qubit_code();
  EXPECT_EQ(gs.n(), 8u);
  EXPECT_EQ(gs.d(), 5u);
  EXPECT_EQ(gs.k(), 3u);
}

TEST(Validate, Failures) {
  auto code_of = [](std::size_t n, std::vector<std::string> lits) {
    std::vector<PauliString> g;
    for (const auto& s : lits) g.push_back(from_string(s));
    try {
      validate_generator_set(n, g);
    } catch (const ValidationError& e) {
      return e.code();
    }
    return std::string("ok");
  };
  EXPECT_EQ(code_of(2, {"XI", "ZI"}), "AnticommutingPair(0,1)");
  EXPECT_EQ(code_of(2, {"XX", "XX"}).rfind("DependentGenerators", 0), 0u);
  EXPECT_EQ(code_of(2, {"XX", "ZZ", "YY"}).rfind("DependentGenerators", 0), 0u);
  EXPECT_EQ(code_of(1, {"Y"}).rfind("NegativeSquare", 0), 0u);
  EXPECT_EQ(code_of(2, {"XXX"}).rfind("LengthMismatch", 0), 0u);
  EXPECT_EQ(code_of(1, {"-I"}).rfind("DependentGenerators", 0), 0u);
  EXPECT_EQ(code_of(4, {}), "ok");
}

}  // namespace
}  // namespace stabenc
