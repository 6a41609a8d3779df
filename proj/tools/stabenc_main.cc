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


// Command-line front end: stabenc {compile,verify,encode,decode,random}.

#include <iostream>

#include <CLI11.hpp>

#include "stabenc/commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Compile stabilizer generator sets into encoding circuits."};
  app.require_subcommand(1);

  stabenc::CompileOptions compile;
  auto* c = app.add_subcommand("compile", "Build the encoding circuit for a stabilizer file.");
  c->add_option("input", compile.input, "Stabilizer file")->required();
  c->add_option("-o,--output", compile.output, "Circuit file (default: stdout, report on stderr)");
  c->add_flag("--json", compile.json, "Report as JSON");
  c->add_flag("--standard-order", compile.standard_order, "Label wires in elimination order");

  stabenc::VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Simulate the encoder and check every codeword.");
  v->add_option("input", verify.input, "Stabilizer file")->required();
  v->add_option("--circuit", verify.circuit, "Check this circuit file instead of compiling");
  v->add_flag("--json", verify.json, "Report as JSON");
  v->add_flag("--standard-order", verify.standard_order, "Label wires in elimination order");
  v->add_flag("--skip-sim", verify.skip_sim, "Structural checks only");
  v->add_option("--seed", verify.seed, "Seed for sampled data words")->capture_default_str();
  v->add_option("--cap", verify.cap, "Largest qubit count to simulate")->capture_default_str();

  stabenc::EncodeOptions encode;
  auto* e = app.add_subcommand("encode", "Print the codeword for a data word.");
  e->add_option("input", encode.input, "Stabilizer file")->required();
  e->add_option("data", encode.data, "Data bits, k characters of 0/1");
  e->add_flag("--standard-order", encode.standard_order, "Label qubits in elimination order");
  e->add_option("--cap", encode.cap, "Largest qubit count to simulate")->capture_default_str();

  stabenc::DecodeOptions decode;
  auto* d = app.add_subcommand("decode", "Run the encoder backwards on a state file.");
  d->add_option("input", decode.input, "Stabilizer file")->required();
  d->add_option("state", decode.state, "State file")->required();
  d->add_flag("--json", decode.json, "Report as JSON");
  d->add_flag("--standard-order", decode.standard_order, "State uses elimination order");
  d->add_option("--cap", decode.cap, "Largest qubit count to simulate")->capture_default_str();

  stabenc::RandomOptions random;
  std::size_t conjugations = 0;
  auto* r = app.add_subcommand("random", "Print a random valid stabilizer file.");
  r->add_option("-n,--qubits", random.n, "Qubit count")->required();
  r->add_option("-d,--generators", random.d, "Generator count")->required();
  r->add_option("--seed", random.seed, "Generator seed")->capture_default_str();
  auto* conj = r->add_option("--conjugations", conjugations, "Scrambling steps (default 20n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? stabenc::kExitOk : stabenc::kExitUsage;
  }

  if (*c) return stabenc::cmd_compile(compile, std::cout, std::cerr);
  if (*v) return stabenc::cmd_verify(verify, std::cout, std::cerr);
  if (*e) return stabenc::cmd_encode(encode, std::cout, std::cerr);
  if (*d) return stabenc::cmd_decode(decode, std::cout, std::cerr);
  if (*conj) random.conjugations = conjugations;
  return stabenc::cmd_random(random, std::cout, std::cerr);
}
