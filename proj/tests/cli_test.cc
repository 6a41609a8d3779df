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


// Runs the installed binary as a subprocess to pin the exit-code contract and
// byte-identical output.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stabenc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run(const std::string& args) {
    const auto out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = std::string(STABENC_BIN) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  std::string write(const std::string& name, const std::string& contents) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }

  std::string data(const std::string& name) const { return std::string(STABENC_TEST_DATA) + "/" + name; }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

TEST_F(Cli, CompileSucceeds) {
  const auto r = run("compile " + data("eight.stab") + " -o " + tmp("c"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("blocks k 3 r1 1 r2 0 b 4"), std::string::npos);
}

TEST_F(Cli, ValidationFailureIsExitOne) {
  const auto r = run("compile " + write("bad.stab", "XI\nZI\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: AnticommutingPair(0,1)", 0), 0u);
}

TEST_F(Cli, IoAndUsageFailuresAreExitTwo) {
  EXPECT_EQ(run("compile " + tmp("missing.stab")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("encode " + data("eight.stab") + " 01").code, 2);
}

TEST_F(Cli, CapIsExitThree) {
  const auto r = run("verify " + data("eight.stab") + " --cap 4");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("--skip-sim"), std::string::npos);
  EXPECT_EQ(run("verify " + data("eight.stab") + " --cap 4 --skip-sim").code, 0);
}

TEST_F(Cli, VerifyPasses) {
  const auto r = run("verify " + data("eight.stab"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("result PASS"), std::string::npos);
}

TEST_F(Cli, OutputsAreByteIdentical) {
  for (const std::string& args : std::vector<std::string>
       {"compile " + data("eight.stab"), "compile --json --standard-order " + data("eight.stab") + " -o /dev/null",
        "verify " + data("eight.stab"), "encode " + data("eight.stab") + " 110", "random -n 7 -d 3 --seed 5"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0) << args << "\n" << a.err;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.err, b.err) << args;
  }
}

TEST_F(Cli, EncodeDecodePipeline) {
  const auto enc = run("encode " + data("eight.stab") + " 101");
  ASSERT_EQ(enc.code, 0);
  const auto dec = run("decode " + data("eight.stab") + " " + write("s.txt", enc.out));
  EXPECT_EQ(dec.code, 0);
  EXPECT_EQ(dec.out.rfind("data 101\n", 0), 0u);
}

TEST_F(Cli, RandomFeedsCompile) {
  const auto r = run("random -n 6 -d 4 --seed 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(run("verify " + write("r.stab", r.out)).code, 0);
}

}  // namespace
