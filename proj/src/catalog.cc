// Copyright 2026 The smallcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smallcodes/catalog.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace smallcodes {

extern const char* const kBuiltinCatalogText;

namespace {

constexpr std::string_view kHeader = "qecc-catalog v1";

std::string hex(QubitMask m) {
  std::ostringstream out;
  out << std::hex << m;
  return out.str();
}

struct PendingCode {
  std::string name;
  int n_qubits = 0;
  std::vector<PauliOperator> stabilizers;
  std::optional<PauliOperator> lx, lz;
  std::vector<PauliOperator> gauges;
  std::vector<std::array<int, 3>> pairs;
  bool has_gauge = false;
  int line = 0;
};

class LineParser {
 public:
  LineParser(std::string_view line, int number) : stream_(std::string(line)), number_(number) {}

  std::string word() {
    std::string w;
    if (!(stream_ >> w)) error("missing field");
    return w;
  }
  int integer() {
    std::string w = word();
    int v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) error("bad integer '" + w + "'");
    return v;
  }
  QubitMask mask() {
    std::string w = word();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v, 16);
    if (ec != std::errc() || ptr != w.data() + w.size() || v > 0xffffffffull) error("bad hex mask '" + w + "'");
    return static_cast<QubitMask>(v);
  }
  void finish() {
    std::string extra;
    if (stream_ >> extra) error("unexpected trailing field '" + extra + "'");
  }
  [[noreturn]] void error(const std::string& msg) const {
    throw CatalogFormatError("catalog line " + std::to_string(number_) + ": " + msg);
  }

 private:
  std::istringstream stream_;
  int number_;
};

StabilizerCode finalize(PendingCode&& p) {
  auto where = "code '" + p.name + "' (line " + std::to_string(p.line) + ")";
  if (!p.lx || !p.lz) throw CatalogFormatError(where + ": missing LX or LZ");
  std::optional<GaugeStructure> gauge;
  if (p.has_gauge) {
    GaugeStructure g;
    g.gauge_generators = std::move(p.gauges);
    g.stabilizer_pairs.resize(p.stabilizers.size());
    for (auto [k, i, j] : p.pairs) {
      if (k < 0 || k >= static_cast<int>(p.stabilizers.size())) {
        throw CatalogFormatError(where + ": PAIR names stabilizer " + std::to_string(k));
      }
      g.stabilizer_pairs[k].push_back({i, j});
    }
    gauge = std::move(g);
  }
  try {
    return StabilizerCode(p.name, p.n_qubits, std::move(p.stabilizers), *p.lx, *p.lz, std::move(gauge));
  } catch (const std::exception& e) {
    throw CatalogFormatError(where + ": " + e.what());
  }
}

}  // namespace

Catalog Catalog::parse(std::string_view text) {
  Catalog catalog;
  std::optional<PendingCode> current;
  bool seen_header = false;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
    if (raw.empty()) continue;
    if (!seen_header) {
      if (raw != kHeader) {
        throw CatalogFormatError("catalog line " + std::to_string(number) + ": expected header '" +
                                 std::string(kHeader) + "'");
      }
      seen_header = true;
      continue;
    }
    LineParser line(raw, number);
    std::string tag = line.word();
    if (tag == "code") {
      if (current) catalog.add(finalize(std::move(*current)));
      current.emplace();
      current->name = line.word();
      current->n_qubits = line.integer();
      current->line = number;
      if (current->n_qubits <= 0 || current->n_qubits > kMaxQubits) line.error("qubit count out of range");
      line.finish();
      continue;
    }
    if (!current) line.error("'" + tag + "' before any 'code' line");
    auto op = [&] {
      QubitMask x = line.mask();
      QubitMask z = line.mask();
      line.finish();
      if ((x | z) & ~low_mask(current->n_qubits)) line.error("mask exceeds qubit count");
      return PauliOperator(current->n_qubits, x, z);
    };
    if (tag == "S") {
      current->stabilizers.push_back(op());
    } else if (tag == "LX") {
      current->lx = op();
    } else if (tag == "LZ") {
      current->lz = op();
    } else if (tag == "G") {
      current->gauges.push_back(op());
      current->has_gauge = true;
    } else if (tag == "PAIR") {
      int k = line.integer(), i = line.integer(), j = line.integer();
      line.finish();
      current->pairs.push_back({k, i, j});
      current->has_gauge = true;
    } else {
      line.error("unknown directive '" + tag + "'");
    }
  }
  if (!seen_header) throw CatalogFormatError("catalog is empty (missing header)");
  if (current) catalog.add(finalize(std::move(*current)));
  return catalog;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void Catalog::add(StabilizerCode code) {
  std::string name = code.name();
  if (!codes_.count(name)) order_.push_back(name);
  codes_.insert_or_assign(name, std::move(code));
}

void Catalog::merge(const Catalog& other) {
  for (const auto& name : other.order_) add(other.codes_.at(name));
}

const StabilizerCode& Catalog::get(const std::string& name) const {
  auto it = codes_.find(name);
  if (it == codes_.end()) throw CodeNotFoundError("unknown code '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::names() const { return order_; }

std::string Catalog::format() const {
  std::string out = std::string(kHeader) + "\n";
  for (const auto& name : order_) out += format_code(codes_.at(name));
  return out;
}

std::string format_code(const StabilizerCode& code) {
  std::string out = "code " + code.name() + " " + std::to_string(code.n_qubits()) + "\n";
  auto line = [&](const char* tag, const PauliOperator& p) {
    out += std::string(tag) + " " + hex(p.x_mask()) + " " + hex(p.z_mask()) + "\n";
  };
  for (const auto& s : code.stabilizers()) line("S", s);
  line("LX", code.logical_x());
  line("LZ", code.logical_z());
  if (const auto& gauge = code.gauge()) {
    for (const auto& g : gauge->gauge_generators) line("G", g);
    for (std::size_t k = 0; k < gauge->stabilizer_pairs.size(); ++k) {
      for (auto [i, j] : gauge->stabilizer_pairs[k]) {
        out += "PAIR " + std::to_string(k) + " " + std::to_string(i) + " " + std::to_string(j) + "\n";
      }
    }
  }
  return out;
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = Catalog::parse(kBuiltinCatalogText);
  return catalog;
}

const StabilizerCode& get_code(const std::string& name) { return builtin_catalog().get(name); }

}  // namespace smallcodes
