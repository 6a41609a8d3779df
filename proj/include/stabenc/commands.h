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
#include <ostream>
#include <stdexcept>
#include <string>

#include "stabenc/sim.h"

namespace stabenc {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Bad arguments (wrong data length and the like); maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CompileOptions {
  std::string input;
  /// Circuit destination. When empty the circuit goes to `out` and the report
  /// to `err`.
  std::string output;
  bool json = false;
  bool standard_order = false;
};

struct VerifyOptions {
  std::string input;
  /// Check this circuit file instead of a freshly compiled one.
  std::string circuit;
  bool json = false;
  bool standard_order = false;
  bool skip_sim = false;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultSimCap;
};

struct EncodeOptions {
  std::string input;
  std::string data;
  bool standard_order = false;
  std::size_t cap = kDefaultSimCap;
};

struct DecodeOptions {
  std::string input;
  std::string state;
  bool json = false;
  bool standard_order = false;
  std::size_t cap = kDefaultSimCap;
};

struct RandomOptions {
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 1;
  std::optional<std::size_t> conjugations;
};

// Each command writes results to `out`, diagnostics to `err`, and returns an
// exit code. Exceptions never escape.
int cmd_compile(const CompileOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_encode(const EncodeOptions& o, std::ostream& out, std::ostream& err);
int cmd_decode(const DecodeOptions& o, std::ostream& out, std::ostream& err);
int cmd_random(const RandomOptions& o, std::ostream& out, std::ostream& err);

}  // namespace stabenc
