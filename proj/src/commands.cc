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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "stabenc/io.h"
#include "stabenc/pauli.h"
#include "stabenc/random_code.h"
#include "stabenc/standard_form.h"
#include "stabenc/synth.h"

namespace stabenc {

namespace {

using nlohmann::json;

constexpr double kTolerance = 1e-10;
constexpr std::size_t kExhaustiveMaxK = 10;
constexpr std::size_t kSampledWords = 64;
constexpr std::size_t kOrthogonalitySample = 8;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

WireOrder order_of(bool standard) { return standard ? WireOrder::kStandard : WireOrder::kOriginal; }

GeneratorSet load_code(const std::string& path) {
  const StabilizerFile f = parse_stabilizer(read_file(path));
  return validate_generator_set(f.n, f.generators);
}

BitVector parse_data(std::string_view text, std::size_t k) {
  BitVector bits;
  try {
    bits = parse_bits(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("data: ") + e.what());
  }
  if (bits.size() != k) {
    throw UsageError("data has " + std::to_string(bits.size()) + " bits, the code encodes k=" +
                     std::to_string(k));
  }
  return bits;
}

json matrix_rows(const BitMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m.get(i, j) ? '1' : '0';
    rows.push_back(row);
  }
  return rows;
}

json paulis(const std::vector<PauliString>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

json standard_form_json(const StandardForm& sf) {
  const Classification cls = classify(sf);
  return {
      {"n", sf.n},
      {"d", sf.d},
      {"k", sf.k},
      {"r1", sf.r1},
      {"r2", sf.r2},
      {"b", sf.b},
      {"perm", sf.perm},
      {"signs", sf.signs},
      {"x_star", matrix_rows(sf.x_star)},
      {"z_star", matrix_rows(sf.z_star)},
      {"x_seed", matrix_rows(sf.x_seed)},
      {"z_seed", matrix_rows(sf.z_seed)},
      {"primary", paulis(cls.primary)},
      {"secondary", paulis(cls.secondary)},
      {"seeds", paulis(cls.seed)},
  };
}

json counts_json(const GateCounts& c) {
  return {
      {"one_qubit", c.one_qubit},
      {"two_qubit", c.two_qubit},
      {"fixup", c.fixup},
      {"total", c.total},
      {"bound_two_qubit", c.bound_two_qubit},
      {"bound_total", c.bound_total},
      {"within_bounds", c.within_bounds()},
  };
}

void write_counts(std::ostream& s, const GateCounts& c) {
  s << "gates one_qubit " << c.one_qubit << " two_qubit " << c.two_qubit << " fixup " << c.fixup << "\n";
  s << "bound two_qubit " << c.two_qubit << " <= " << c.bound_two_qubit << " "
    << (c.two_qubit_within_bound() ? "ok" : "EXCEEDED") << "\n";
  s << "bound total " << c.total << " <= " << c.bound_total << " "
    << (c.total_within_bound() ? "ok" : "EXCEEDED") << "\n";
}

// Runs `body`, translating exceptions into a diagnostic and exit code.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const FormatError& e) {
    err << "error: ParseError(" << e.line() << "," << e.column() << "): " << e.what() << "\n";
    return kExitInvalid;
  } catch (const CapExceeded& e) {
    err << "error: CapExceeded(" << e.n() << "," << e.cap() << "): " << e.what()
        << "; use --skip-sim to skip simulation or raise --cap\n";
    return kExitCap;
  } catch (const IoError& e) {
    err << "error: IoError: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: Usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return kExitInvalid;
  }
}

std::vector<BitVector> data_words(std::size_t k, std::uint64_t seed) {
  std::vector<BitVector> words;
  if (k <= kExhaustiveMaxK) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      BitVector w(k);
      for (std::size_t i = 0; i < k; ++i) w.set(i, (v >> (k - 1 - i)) & 1);
      words.push_back(std::move(w));
    }
    return words;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < kSampledWords; ++s) {
    BitVector w(k);
    for (std::size_t i = 0; i < k; ++i) w.set(i, rng() & 1);
    words.push_back(std::move(w));
  }
  return words;
}

struct Check {
  std::string name;
  std::string detail;
  double value = 0.0;
  bool pass = false;
};

}  // namespace

int cmd_compile(const CompileOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GeneratorSet gs = load_code(o.input);
    const StandardForm sf = compute_standard_form(gs);
    const EncodingCircuit c = synthesize(sf, {order_of(o.standard_order), {}});
    const GateCounts counts = count_report(c);
    const std::string circuit_text = emit_circuit(c);

    std::ostringstream report;
    if (o.json) {
      json j = standard_form_json(sf);
      j["order"] = o.standard_order ? "standard" : "original";
      j["fixup"] = to_string(c.fixup);
      j["counts"] = counts_json(counts);
      report << j.dump(2) << "\n";
    } else {
      report << "code n " << sf.n << " d " << sf.d << " k " << sf.k << "\n";
      report << "blocks k " << sf.k << " r1 " << sf.r1 << " r2 " << sf.r2 << " b " << sf.b << "\n";
      report << "signs";
      for (int s : sf.signs) report << (s < 0 ? " -" : " +");
      report << "\n";
      write_counts(report, counts);
    }

    if (o.output.empty()) {
      out << circuit_text;
      err << report.str();
    } else {
      write_file(o.output, circuit_text);
      out << report.str();
    }
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GeneratorSet gs = load_code(o.input);
    const StandardForm sf = compute_standard_form(gs);
    const EncodingCircuit c = o.circuit.empty() ? synthesize(sf, {order_of(o.standard_order), {}})
                                                : parse_circuit(read_file(o.circuit));
    if (c.n != sf.n || c.k != sf.k) {
      throw ValidationError(ValidationError::Kind::kLengthMismatch, c.n, sf.n,
                            "circuit does not match the code's qubit or data count");
    }
    if (!o.skip_sim) check_cap(sf.n, o.cap);

    std::vector<Check> checks;
    const SeedReport seeds = verify_seed_conditions(sf);
    checks.push_back({"seed_conditions",
                      "rank " + std::to_string(seeds.seed_primary_rank) + " commuting " +
                          (seeds.commuting ? "yes" : "no"),
                      0.0, seeds.ok()});
    const GateCounts counts = count_report(c);
    checks.push_back({"gate_bounds",
                      std::to_string(counts.two_qubit) + "<=" + std::to_string(counts.bound_two_qubit) + " " +
                          std::to_string(counts.total) + "<=" + std::to_string(counts.bound_total),
                      0.0, counts.within_bounds()});

    std::size_t word_count = 0;
    if (!o.skip_sim) {
      const auto words = data_words(sf.k, o.seed);
      word_count = words.size();
      const BitVector reference = solve_sign_fixup(sf).x();
      const EncodingCircuit inverse_circuit = reverse(c);
      double distance = 0.0, residual = 0.0, overlap = 0.0, fidelity_loss = 0.0;
      std::vector<StateVector> sample;
      std::optional<StateVector> previous;
      for (const auto& word : words) {
        const std::uint64_t in = input_index(c, word);
        const StateVector encoded = apply_circuit(StateVector::basis(sf.n, in, o.cap), c, o.cap);
        distance = std::max(distance, max_abs_difference(encoded, encode_oracle(sf, word, reference, c.order, o.cap)));
        distance = std::max(distance,
                            max_abs_difference(encoded, encode_projector_oracle(sf, word, reference, c.order, o.cap)));
        const StateVector original = c.order == WireOrder::kOriginal ? encoded : permute_qubits(encoded, c.perm);
        residual = std::max(residual, check_codeword(original, gs).max_residual);
        const StateVector back = apply_circuit(encoded, inverse_circuit, o.cap);
        fidelity_loss = std::max(fidelity_loss, std::abs(1.0 - back[in] * back[in]));
        // Distinct words sampled for orthogonality: the previous word and the
        // first few words seen.
        for (const auto& s : sample) overlap = std::max(overlap, std::abs(inner_product(s, encoded)));
        if (previous && sample.size() >= kOrthogonalitySample) {
          overlap = std::max(overlap, std::abs(inner_product(*previous, encoded)));
        }
        if (sample.size() < kOrthogonalitySample) sample.push_back(encoded);
        previous = encoded;
      }
      checks.push_back({"circuit_vs_oracle", "max " + fmt(distance), distance, distance <= kTolerance});
      checks.push_back({"stabilizer_residual", "max " + fmt(residual), residual, residual <= kTolerance});
      checks.push_back({"orthogonality", "max " + fmt(overlap), overlap, overlap <= kTolerance});
      checks.push_back(
          {"decode_fidelity", "max_loss " + fmt(fidelity_loss), fidelity_loss, fidelity_loss <= kTolerance});
    }

    const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.pass; });
    if (o.json) {
      json j;
      j["code"] = {{"n", sf.n}, {"d", sf.d}, {"k", sf.k}, {"r1", sf.r1}, {"r2", sf.r2}, {"b", sf.b}};
      j["words"] = word_count;
      j["simulated"] = !o.skip_sim;
      j["checks"] = json::array();
      for (const auto& ch : checks) {
        j["checks"].push_back({{"name", ch.name}, {"detail", ch.detail}, {"value", ch.value}, {"pass", ch.pass}});
      }
      j["result"] = pass ? "PASS" : "FAIL";
      out << j.dump(2) << "\n";
    } else {
      out << "code n " << sf.n << " d " << sf.d << " k " << sf.k << " r1 " << sf.r1 << " r2 " << sf.r2 << " b "
          << sf.b << "\n";
      if (o.skip_sim) {
        out << "simulation skipped\n";
      } else {
        out << "words " << word_count << (sf.k <= kExhaustiveMaxK ? " exhaustive" : " sampled") << "\n";
      }
      for (const auto& ch : checks) {
        out << (ch.pass ? "PASS " : "FAIL ") << ch.name << " " << ch.detail << "\n";
      }
      out << "result " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitInvalid;
  });
}

int cmd_encode(const EncodeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GeneratorSet gs = load_code(o.input);
    const StandardForm sf = compute_standard_form(gs);
    const EncodingCircuit c = synthesize(sf, {order_of(o.standard_order), {}});
    const BitVector data = parse_data(o.data, sf.k);
    check_cap(sf.n, o.cap);
    const StateVector s = apply_circuit(StateVector::basis(sf.n, input_index(c, data), o.cap), c, o.cap);
    out << emit_state(s);
    return kExitOk;
  });
}

int cmd_decode(const DecodeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GeneratorSet gs = load_code(o.input);
    const StandardForm sf = compute_standard_form(gs);
    const EncodingCircuit c = synthesize(sf, {order_of(o.standard_order), {}});
    check_cap(sf.n, o.cap);
    const StateVector state = parse_state(read_file(o.state), o.cap);
    if (state.num_qubits() != sf.n) {
      throw UsageError("state has " + std::to_string(state.num_qubits()) + " qubits, the code has n=" +
                       std::to_string(sf.n));
    }
    const StateVector back = apply_circuit(state, reverse(c), o.cap);

    std::uint64_t data_mask = 0;
    for (std::size_t i = 0; i < sf.k; ++i) data_mask |= qubit_mask(sf.n, c.data_wire(i));
    std::uint64_t best = 0;
    double ancilla_weight = 0.0;
    for (std::uint64_t i = 0; i < back.dimension(); ++i) {
      const double p = back[i] * back[i];
      if (i & ~data_mask) ancilla_weight += p;
      if (p > back[best] * back[best]) best = i;
    }
    std::string bits;
    for (std::size_t i = 0; i < sf.k; ++i) bits += (best & qubit_mask(sf.n, c.data_wire(i))) ? '1' : '0';
    const double probability = back[best] * back[best];

    if (o.json) {
      json j = {{"data", bits}, {"probability", probability}, {"ancilla_weight", ancilla_weight}};
      out << j.dump(2) << "\n";
    } else {
      out << "data " << bits << "\n";
      out << "probability " << fmt(probability) << "\n";
    }
    if (ancilla_weight > kTolerance) {
      err << "warning: input is not a codeword; ancilla weight " << fmt(ancilla_weight) << "\n";
    }
    return kExitOk;
  });
}

int cmd_random(const RandomOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.d > o.n) throw UsageError("generator count d must not exceed qubit count n");
    const GeneratorSet gs = gen_random_code(o.n, o.d, o.seed, o.conjugations);
    out << emit_stabilizer(gs.n(), gs.generators());
    return kExitOk;
  });
}

}  // namespace stabenc
