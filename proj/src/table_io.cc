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

#include "smallcodes/table_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace smallcodes {

namespace {

constexpr std::string_view kHeader = "qecc-table v1";

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  bool line(std::string& out) {
    while (std::getline(in_, out)) {
      ++number_;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (!out.empty()) return true;
    }
    return false;
  }
  [[noreturn]] void corrupt(const std::string& msg) const {
    throw CorruptTableError("table line " + std::to_string(number_) + ": " + msg);
  }
  std::uint64_t field(std::istringstream& fields, std::string_view key, int base) const {
    std::string tok;
    if (!(fields >> tok)) corrupt("missing field '" + std::string(key) + "'");
    if (tok.size() <= key.size() || tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=') {
      corrupt("expected '" + std::string(key) + "=', found '" + tok + "'");
    }
    std::uint64_t v = 0;
    const char* first = tok.data() + key.size() + 1;
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v, base);
    if (ec != std::errc() || ptr != last) corrupt("bad value in '" + tok + "'");
    return v;
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

}  // namespace

void write_table(const DecoderTable& table, std::ostream& out) {
  const auto& code = table.code();
  out << kHeader << '\n';
  out << "code " << code.name() << ' ' << hex(table.code_hash()) << '\n';
  out << "n_max " << table.n_max() << '\n';
  std::vector<WeightProfile> profiles;
  for (int n = 0; n <= table.n_max(); ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int nz = 0; nz <= m; ++nz) profiles.push_back({n - m, m - nz, nz});
    }
  }
  for (Syndrome s = 0; s < table.n_syndromes(); ++s) {
    const auto& c = table.reference_correction(s);
    out << "cstar s=" << hex(s) << " x=" << hex(c.x_mask()) << " z=" << hex(c.z_mask()) << '\n';
    for (auto l : kLogicalClasses) {
      const std::uint32_t* counts = table.counts(s, l);
      for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (!counts[i]) continue;
        out << "s=" << hex(s) << " l=" << to_char(l) << " nx=" << profiles[i].n_x << " ny=" << profiles[i].n_y
            << " nz=" << profiles[i].n_z << " count=" << counts[i] << '\n';
      }
    }
  }
  out << "end\n";
}

void save_table(const DecoderTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write table '" + path + "'");
  write_table(table, out);
  if (!out) throw std::runtime_error("error writing table '" + path + "'");
}

DecoderTable read_table(std::istream& in, const StabilizerCode& code) {
  Reader r(in);
  std::string text;
  if (!r.line(text)) throw CorruptTableError("empty table file");
  if (text != kHeader) {
    if (text.rfind("qecc-table", 0) == 0) throw TableVersionError("unsupported table version '" + text + "'");
    r.corrupt("missing 'qecc-table' header");
  }
  if (!r.line(text)) r.corrupt("missing code line");
  std::string name, hash_text;
  {
    std::istringstream f(text);
    std::string tag;
    if (!(f >> tag >> name >> hash_text) || tag != "code") r.corrupt("malformed code line");
  }
  std::uint64_t hash = 0;
  if (auto [p, ec] = std::from_chars(hash_text.data(), hash_text.data() + hash_text.size(), hash, 16);
      ec != std::errc() || p != hash_text.data() + hash_text.size()) {
    r.corrupt("malformed code hash");
  }
  if (hash != code.content_hash()) {
    throw TableHashMismatchError("table was built for code '" + name + "' (hash " + hash_text +
                                 "), not for the requested code '" + code.name() + "'");
  }
  if (!r.line(text)) r.corrupt("missing n_max line");
  int n_max = -1;
  {
    std::istringstream f(text);
    std::string tag;
    if (!(f >> tag >> n_max) || tag != "n_max" || n_max < 0 || n_max > code.n_qubits()) r.corrupt("bad n_max line");
  }
  const std::size_t n_syndromes = std::size_t{1} << code.n_stabilizers();
  const std::size_t n_profiles = profile_count(n_max);
  std::vector<std::uint32_t> counts(n_syndromes * 4 * n_profiles, 0);
  std::vector<PauliOperator> cstar(n_syndromes, PauliOperator::identity(code.n_qubits()));
  std::vector<bool> have_cstar(n_syndromes, false);
  bool ended = false;
  while (r.line(text)) {
    if (text == "end") {
      ended = true;
      break;
    }
    std::istringstream f(text);
    if (text.rfind("cstar ", 0) == 0) {
      std::string tag;
      f >> tag;
      auto s = r.field(f, "s", 16);
      auto x = r.field(f, "x", 16);
      auto z = r.field(f, "z", 16);
      if (s >= n_syndromes || ((x | z) & ~std::uint64_t{low_mask(code.n_qubits())})) r.corrupt("cstar out of range");
      cstar[s] = PauliOperator(code.n_qubits(), static_cast<QubitMask>(x), static_cast<QubitMask>(z));
      if (compute_syndrome(code, cstar[s]) != s) r.corrupt("reference correction has the wrong syndrome");
      have_cstar[s] = true;
      continue;
    }
    auto s = r.field(f, "s", 16);
    std::string ltok;
    if (!(f >> ltok) || ltok.size() != 3 || ltok.compare(0, 2, "l=") != 0) r.corrupt("malformed class field");
    LogicalClass l;
    try {
      l = parse_logical_class(ltok[2]);
    } catch (const std::invalid_argument&) {
      r.corrupt("unknown class '" + ltok + "'");
    }
    auto nx = r.field(f, "nx", 10);
    auto ny = r.field(f, "ny", 10);
    auto nz = r.field(f, "nz", 10);
    auto count = r.field(f, "count", 10);
    if (s >= n_syndromes || nx + ny + nz > static_cast<std::uint64_t>(n_max) || count > 0xffffffffull) {
      r.corrupt("entry out of range");
    }
    counts[(s * 4 + static_cast<int>(l)) * n_profiles + profile_index(nx, ny, nz)] = static_cast<std::uint32_t>(count);
  }
  if (!ended) throw CorruptTableError("table is truncated (no 'end' line)");
  for (bool h : have_cstar) {
    if (!h) throw CorruptTableError("table lacks a reference correction for some syndrome");
  }
  DecoderTable table(code, n_max, std::move(counts), std::move(cstar));
  if (table.total_count() != count_errors(code.n_qubits(), n_max)) {
    throw CorruptTableError("table counts do not add up to the number of enumerated errors");
  }
  return table;
}

DecoderTable load_table(const std::string& path, const StabilizerCode& code) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table '" + path + "'");
  return read_table(in, code);
}

}  // namespace smallcodes
