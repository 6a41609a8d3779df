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


#include "stabenc/commands.h"

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "stabenc/io.h"

namespace stabenc {
namespace {

namespace fs = std::filesystem;

class Commands : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stabenc_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) {
    const auto path = (dir_ / name).string();
    write_file(path, contents);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string eight() {
    return file("eight.stab", "n 8\nXXXXXXXX\nZZZZZZZZ\nXIXIZYZY\nXIYZXIYZ\nXZIYIYXZ\n");
  }

  std::ostringstream out, err;

 private:
  fs::path dir_;
};

TEST_F(Commands, CompileEightQubit) {
  CompileOptions o{eight(), path("eight.circ"), false, false};
  ASSERT_EQ(cmd_compile(o, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("blocks k 3 r1 1 r2 0 b 4\n"), std::string::npos);
  EXPECT_NE(out.str().find("bound two_qubit 23 <= 31 ok\n"), std::string::npos);
  EXPECT_NE(out.str().find("bound total 27 <= 40 ok\n"), std::string::npos);
  EXPECT_NO_THROW(parse_circuit(read_file(path("eight.circ"))));
}

TEST_F(Commands, CompileToStdout) {
  CompileOptions o{eight(), "", false, true};
  ASSERT_EQ(cmd_compile(o, out, err), kExitOk);
  EXPECT_EQ(parse_circuit(out.str()).order, WireOrder::kStandard);
  EXPECT_NE(err.str().find("blocks k 3"), std::string::npos);
}

TEST_F(Commands, CompileJson) {
  CompileOptions o{eight(), path("c"), true, false};
  ASSERT_EQ(cmd_compile(o, out, err), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["b"], 4);
  EXPECT_EQ(j["counts"]["two_qubit"], 23);
  EXPECT_EQ(j["x_star"].size(), 8u);
  EXPECT_EQ(j["signs"].size(), 5u);
}

TEST_F(Commands, CompileEmptyCode) {
  CompileOptions o{file("id.stab", "n 4\n"), path("id.circ"), false, false};
  ASSERT_EQ(cmd_compile(o, out, err), kExitOk);
  EXPECT_TRUE(parse_circuit(read_file(path("id.circ"))).gates.empty());
}

TEST_F(Commands, CompileAnticommuting) {
  CompileOptions o{file("bad.stab", "XI\nZI\n"), path("bad.circ"), false, false};
  EXPECT_EQ(cmd_compile(o, out, err), kExitInvalid);
  EXPECT_EQ(err.str().rfind("error: AnticommutingPair(0,1)", 0), 0u);
}

TEST_F(Commands, CompileParseErrorAndMissingFile) {
  CompileOptions bad{file("bad.stab", "XQX\n"), path("x"), false, false};
  EXPECT_EQ(cmd_compile(bad, out, err), kExitInvalid);
  EXPECT_NE(err.str().find("ParseError(1,2)"), std::string::npos);
  CompileOptions missing{path("nope.stab"), path("x"), false, false};
  EXPECT_EQ(cmd_compile(missing, out, err), kExitUsage);
}

TEST_F(Commands, VerifyEightQubit) {
  VerifyOptions o;
  o.input = eight();
  ASSERT_EQ(cmd_verify(o, out, err), kExitOk) << out.str() << err.str();
  EXPECT_NE(out.str().find("words 8 exhaustive\n"), std::string::npos);
  EXPECT_NE(out.str().find("result PASS\n"), std::string::npos);
}

TEST_F(Commands, VerifyZZ) {
  VerifyOptions o;
  o.input = file("zz.stab", "ZZ\n");
  EXPECT_EQ(cmd_verify(o, out, err), kExitOk);
  std::ostringstream e0, e1;
  ASSERT_EQ(cmd_encode({o.input, "0", false, kDefaultSimCap}, e0, err), kExitOk);
  ASSERT_EQ(cmd_encode({o.input, "1", false, kDefaultSimCap}, e1, err), kExitOk);
  EXPECT_EQ(e0.str(), "qubits 2\n00 1\n");
  EXPECT_EQ(e1.str(), "qubits 2\n11 1\n");
}

TEST_F(Commands, VerifyDetectsTampering) {
  const auto code = eight();
  CompileOptions c{code, path("eight.circ"), false, false};
  ASSERT_EQ(cmd_compile(c, out, err), kExitOk);
  auto circuit = parse_circuit(read_file(path("eight.circ")));
  // Drop one controlled gate after the seed fan.
  circuit.gates.erase(circuit.gates.begin() + 5);
  write_file(path("tampered.circ"), emit_circuit(circuit));

  VerifyOptions o;
  o.input = code;
  o.circuit = path("tampered.circ");
  std::ostringstream report;
  EXPECT_EQ(cmd_verify(o, report, err), kExitInvalid);
  EXPECT_NE(report.str().find("FAIL stabilizer_residual max "), std::string::npos);
  EXPECT_NE(report.str().find("result FAIL\n"), std::string::npos);
}

TEST_F(Commands, VerifyCap) {
  VerifyOptions o;
  o.input = eight();
  o.cap = 4;
  EXPECT_EQ(cmd_verify(o, out, err), kExitCap);
  EXPECT_NE(err.str().find("--skip-sim"), std::string::npos);
  o.skip_sim = true;
  std::ostringstream report;
  EXPECT_EQ(cmd_verify(o, report, err), kExitOk);
  EXPECT_NE(report.str().find("simulation skipped\n"), std::string::npos);
}

TEST_F(Commands, VerifyJson) {
  VerifyOptions o;
  o.input = eight();
  o.json = true;
  ASSERT_EQ(cmd_verify(o, out, err), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["result"], "PASS");
  EXPECT_EQ(j["words"], 8);
}

TEST_F(Commands, EncodeEightQubitZeroWord) {
  ASSERT_EQ(cmd_encode({eight(), "000", false, kDefaultSimCap}, out, err), kExitOk);
  const auto s = parse_state(out.str());
  std::size_t nonzero = 0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    if (s[i] != 0.0) {
      ++nonzero;
      EXPECT_NEAR(std::abs(s[i]), 0.25, 1e-12);
    }
  }
  EXPECT_EQ(nonzero, 16u);
}

TEST_F(Commands, EncodeEmptyCode) {
  ASSERT_EQ(cmd_encode({file("id.stab", "n 4\n"), "1011", false, kDefaultSimCap}, out, err), kExitOk);
  EXPECT_EQ(out.str(), "qubits 4\n1011 1\n");
}

TEST_F(Commands, EncodeWrongLength) {
  EXPECT_EQ(cmd_encode({eight(), "01", false, kDefaultSimCap}, out, err), kExitUsage);
  EXPECT_EQ(cmd_encode({eight(), "0a1", false, kDefaultSimCap}, out, err), kExitUsage);
}

TEST_F(Commands, DecodeRoundTrip) {
  const auto code = eight();
  for (const std::string word : {"000", "101", "111"}) {
    for (bool standard : {false, true}) {
      std::ostringstream enc, dec, warn;
      ASSERT_EQ(cmd_encode({code, word, standard, kDefaultSimCap}, enc, warn), kExitOk);
      const auto state = file("s.txt", enc.str());
      ASSERT_EQ(cmd_decode({code, state, false, standard, kDefaultSimCap}, dec, warn), kExitOk);
      EXPECT_EQ(dec.str().rfind("data " + word + "\n", 0), 0u);
      EXPECT_TRUE(warn.str().empty()) << warn.str();
    }
  }
}

TEST_F(Commands, DecodeWarnsOnNonCodeword) {
  const auto state = file("s.txt", "qubits 8\n00000001 1\n");
  ASSERT_EQ(cmd_decode({eight(), state, false, false, kDefaultSimCap}, out, err), kExitOk);
  EXPECT_NE(err.str().find("warning: input is not a codeword"), std::string::npos);
}

TEST_F(Commands, RandomIsDeterministicAndValid) {
  std::ostringstream a, b;
  ASSERT_EQ(cmd_random({6, 4, 17, std::nullopt}, a, err), kExitOk);
  ASSERT_EQ(cmd_random({6, 4, 17, std::nullopt}, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  const auto f = parse_stabilizer(a.str());
  EXPECT_NO_THROW(validate_generator_set(f.n, f.generators));
  EXPECT_EQ(cmd_random({2, 3, 1, std::nullopt}, out, err), kExitUsage);
}

}  // namespace
}  // namespace stabenc
