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

#include "stabenc/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace stabenc {

namespace {

FormatError error_at(std::size_t line, std::size_t column, const std::string& msg) {
  std::ostringstream s;
  s << "line " << line;
  if (column) s << ", column " << column;
  s << ": " << msg;
  return FormatError(s.str(), line, column);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits a line into whitespace-separated tokens, dropping a trailing comment.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    tokens.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::optional<std::size_t> to_index(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::size_t expect_index(const Token& t, std::size_t line) {
  auto v = to_index(t.text);
  if (!v) throw error_at(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return *v;
}

std::string_view role_name(WireRole role) {
  switch (role) {
    case WireRole::kData: return "data";
    case WireRole::kZero: return "zero";
    case WireRole::kPrimary: return "primary";
  }
  return "data";
}

std::string format_amplitude(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

FormatError::FormatError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what), line_(line), column_(column) {}

StabilizerFile parse_stabilizer(std::string_view text) {
  StabilizerFile file;
  std::optional<std::size_t> declared;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    if (tokens[0].text == "n") {
      if (tokens.size() != 2) throw error_at(line_no, tokens[0].column, "expected 'n <count>'");
      if (declared) throw error_at(line_no, tokens[0].column, "duplicate 'n' directive");
      if (!file.generators.empty()) {
        throw error_at(line_no, tokens[0].column, "'n' directive must precede generators");
      }
      declared = expect_index(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 1) throw error_at(line_no, tokens[1].column, "unexpected text after generator");
    PauliString p;
    try {
      p = from_string(tokens[0].text);
    } catch (const PauliParseError& e) {
      const std::size_t column = tokens[0].column + e.column() - 1;
      throw error_at(line_no, column, e.what());
    }
    const std::size_t expected = declared ? *declared
                                 : file.generators.empty() ? p.size()
                                                           : file.generators.front().size();
    if (p.size() != expected) {
      std::ostringstream msg;
      msg << "generator has " << p.size() << " factors, expected " << expected;
      throw error_at(line_no, tokens[0].column, msg.str());
    }
    file.generators.push_back(std::move(p));
  }
  if (declared) {
    file.n = *declared;
  } else if (!file.generators.empty()) {
    file.n = file.generators.front().size();
  } else {
    throw FormatError("no generators and no 'n' directive; cannot determine the qubit count", 0);
  }
  return file;
}

std::string emit_stabilizer(std::size_t n, const std::vector<PauliString>& generators) {
  std::ostringstream s;
  s << "n " << n << "\n";
  for (const auto& g : generators) s << to_string(g) << "\n";
  return s.str();
}

std::string emit_circuit(const EncodingCircuit& c) {
  std::ostringstream s;
  s << "# stabilizer encoding circuit\n";
  s << "qubits " << c.n << "\n";
  s << "data " << c.k << "\n";
  s << "primary " << c.b << "\n";
  s << "secondary " << c.r << "\n";
  s << "secondary_pivots " << c.r1 << "\n";
  s << "order " << (c.order == WireOrder::kOriginal ? "original" : "standard") << "\n";
  s << "perm";
  for (auto q : c.perm) s << " " << q;
  s << "\n";
  for (std::size_t w = 0; w < c.wires.size(); ++w) {
    const auto& t = c.wires[w];
    s << "wire " << w << " " << role_name(t.role) << " " << t.index << " row " << t.row << " qubit "
      << t.qubit << "\n";
  }
  s << "fixup " << to_string(c.fixup) << "\n";
  s << "gates " << c.gates.size() << "\n";
  for (const auto& g : c.gates) {
    s << gate_name(g.kind);
    if (g.control) s << " " << *g.control;
    s << " " << g.target << "\n";
  }
  return s.str();
}

EncodingCircuit parse_circuit(std::string_view text) {
  EncodingCircuit c;
  std::optional<std::size_t> n, declared_gates;
  bool have_k = false, have_b = false, have_r = false, have_r1 = false, have_order = false;
  bool have_perm = false, have_fixup = false;
  std::vector<bool> wire_seen;

  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    const std::string_view key = tokens[0].text;
    auto need = [&](std::size_t count) {
      if (tokens.size() != count) {
        throw error_at(line_no, tokens[0].column, "wrong number of fields for '" + std::string(key) + "'");
      }
    };
    auto need_n = [&]() {
      if (!n) throw error_at(line_no, tokens[0].column, "'qubits' must come first");
    };

    if (key == "qubits") {
      need(2);
      n = expect_index(tokens[1], line_no);
      c.n = *n;
      c.wires.assign(*n, WireTag{});
      wire_seen.assign(*n, false);
      c.fixup = PauliString(*n);
    } else if (key == "data") {
      need(2);
      c.k = expect_index(tokens[1], line_no);
      have_k = true;
    } else if (key == "primary") {
      need(2);
      c.b = expect_index(tokens[1], line_no);
      have_b = true;
    } else if (key == "secondary") {
      need(2);
      c.r = expect_index(tokens[1], line_no);
      have_r = true;
    } else if (key == "secondary_pivots") {
      need(2);
      c.r1 = expect_index(tokens[1], line_no);
      have_r1 = true;
    } else if (key == "order") {
      need(2);
      if (tokens[1].text == "original") {
        c.order = WireOrder::kOriginal;
      } else if (tokens[1].text == "standard") {
        c.order = WireOrder::kStandard;
      } else {
        throw error_at(line_no, tokens[1].column, "order must be 'original' or 'standard'");
      }
      have_order = true;
    } else if (key == "perm") {
      need_n();
      need(*n + 1);
      c.perm.clear();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::size_t q = expect_index(tokens[i], line_no);
        if (q >= *n) throw error_at(line_no, tokens[i].column, "perm entry out of range");
        c.perm.push_back(q);
      }
      have_perm = true;
    } else if (key == "wire") {
      need_n();
      need(8);
      const std::size_t w = expect_index(tokens[1], line_no);
      if (w >= *n) throw error_at(line_no, tokens[1].column, "wire index out of range");
      if (wire_seen[w]) throw error_at(line_no, tokens[1].column, "duplicate wire");
      WireTag tag;
      if (tokens[2].text == "data") {
        tag.role = WireRole::kData;
      } else if (tokens[2].text == "zero") {
        tag.role = WireRole::kZero;
      } else if (tokens[2].text == "primary") {
        tag.role = WireRole::kPrimary;
      } else {
        throw error_at(line_no, tokens[2].column, "unknown wire role '" + std::string(tokens[2].text) + "'");
      }
      tag.index = expect_index(tokens[3], line_no);
      if (tokens[4].text != "row") throw error_at(line_no, tokens[4].column, "expected 'row'");
      tag.row = expect_index(tokens[5], line_no);
      if (tokens[6].text != "qubit") throw error_at(line_no, tokens[6].column, "expected 'qubit'");
      tag.qubit = expect_index(tokens[7], line_no);
      if (tag.row >= *n || tag.qubit >= *n) throw error_at(line_no, tokens[5].column, "wire label out of range");
      c.wires[w] = tag;
      wire_seen[w] = true;
    } else if (key == "fixup") {
      need_n();
      need(2);
      PauliString p;
      try {
        p = from_string(tokens[1].text);
      } catch (const PauliParseError& e) {
        throw error_at(line_no, tokens[1].column + e.column() - 1, e.what());
      }
      if (p.size() != *n) throw error_at(line_no, tokens[1].column, "fixup length must equal qubits");
      c.fixup = p;
      have_fixup = true;
    } else if (key == "gates") {
      need(2);
      declared_gates = expect_index(tokens[1], line_no);
    } else {
      need_n();
      const auto kind = gate_kind_from_name(key);
      if (!kind) throw error_at(line_no, tokens[0].column, "unknown gate '" + std::string(key) + "'");
      Gate g;
      g.kind = *kind;
      if (is_two_qubit(*kind)) {
        need(3);
        g.control = expect_index(tokens[1], line_no);
        g.target = expect_index(tokens[2], line_no);
        if (*g.control == g.target) throw error_at(line_no, tokens[2].column, "control equals target");
        if (*g.control >= *n) throw error_at(line_no, tokens[1].column, "wire index out of range");
      } else {
        need(2);
        g.target = expect_index(tokens[1], line_no);
      }
      if (g.target >= *n) throw error_at(line_no, tokens.back().column, "wire index out of range");
      c.gates.push_back(g);
    }
  }

  if (!n || !have_k || !have_b || !have_r || !have_r1 || !have_order || !have_perm || !have_fixup) {
    throw FormatError("circuit header is incomplete", 0);
  }
  for (std::size_t w = 0; w < *n; ++w) {
    if (!wire_seen[w]) throw FormatError("missing description for wire " + std::to_string(w), 0);
  }
  if (c.k + c.b + c.r != *n) throw FormatError("data + primary + secondary must equal qubits", 0);
  if (declared_gates && *declared_gates != c.gates.size()) {
    throw FormatError("gate count does not match the 'gates' line", 0);
  }
  return c;
}

std::string emit_state(const StateVector& s, double threshold) {
  std::ostringstream out;
  out << "qubits " << s.num_qubits() << "\n";
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    const double a = s[i];
    if (std::abs(a) > threshold) out << basis_label(i, s.num_qubits()) << " " << format_amplitude(a) << "\n";
  }
  return out.str();
}

StateVector parse_state(std::string_view text, std::size_t cap) {
  std::optional<StateVector> state;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    if (tokens[0].text == "qubits") {
      if (tokens.size() != 2) throw error_at(line_no, tokens[0].column, "expected 'qubits <count>'");
      if (state) throw error_at(line_no, tokens[0].column, "duplicate 'qubits' line");
      state = StateVector(expect_index(tokens[1], line_no), cap);
      continue;
    }
    if (!state) throw error_at(line_no, tokens[0].column, "'qubits' must come first");
    if (tokens.size() != 2) throw error_at(line_no, tokens[0].column, "expected '<bits> <amplitude>'");
    if (tokens[0].text.size() != state->num_qubits()) {
      throw error_at(line_no, tokens[0].column, "basis label length must equal qubits");
    }
    BitVector bits;
    try {
      bits = parse_bits(tokens[0].text);
    } catch (const std::invalid_argument& e) {
      throw error_at(line_no, tokens[0].column, e.what());
    }
    const std::string amp_text(tokens[1].text);
    char* end = nullptr;
    const double amp = std::strtod(amp_text.c_str(), &end);
    if (end != amp_text.c_str() + amp_text.size()) {
      throw error_at(line_no, tokens[1].column, "invalid amplitude '" + amp_text + "'");
    }
    (*state)[basis_index(bits)] = amp;
  }
  if (!state) throw FormatError("state file has no 'qubits' line", 0);
  return *state;
}

BitVector parse_bits(std::string_view text) {
  BitVector bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("bit strings may only contain '0' and '1'");
    }
    bits.set(i, text[i] == '1');
  }
  return bits;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream s;
  s << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return s.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace stabenc
