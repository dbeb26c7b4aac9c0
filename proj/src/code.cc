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

#include "smallcodes/code.h"

#include <algorithm>
#include <stdexcept>

#include "smallcodes/catalog.h"

namespace smallcodes {

int GaugeStructure::copies_per_stabilizer() const {
  if (stabilizer_pairs.empty()) return 0;
  std::size_t r = stabilizer_pairs.front().size();
  for (const auto& pairs : stabilizer_pairs) {
    if (pairs.size() != r) return 0;
  }
  return static_cast<int>(r);
}

StabilizerCode::StabilizerCode(std::string name, int n_qubits, std::vector<PauliOperator> stabilizers,
                               PauliOperator logical_x, PauliOperator logical_z, std::optional<GaugeStructure> gauge)
    : name_(std::move(name)),
      n_qubits_(n_qubits),
      stabilizers_(std::move(stabilizers)),
      logical_x_(logical_x),
      logical_z_(logical_z),
      gauge_(std::move(gauge)) {
  auto check = [&](const PauliOperator& p) {
    if (p.n_qubits() != n_qubits_) {
      throw SizeMismatchError("code '" + name_ + "': operator on " + std::to_string(p.n_qubits()) +
                              " qubits in a " + std::to_string(n_qubits_) + "-qubit code");
    }
  };
  for (const auto& s : stabilizers_) check(s);
  check(logical_x_);
  check(logical_z_);
  if (gauge_) {
    for (const auto& g : gauge_->gauge_generators) check(g);
    if (gauge_->stabilizer_pairs.size() != stabilizers_.size()) {
      throw std::invalid_argument("code '" + name_ + "': gauge pair list does not cover every stabilizer");
    }
    int n_gauge = static_cast<int>(gauge_->gauge_generators.size());
    for (const auto& pairs : gauge_->stabilizer_pairs) {
      for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n_gauge || j >= n_gauge) {
          throw std::out_of_range("code '" + name_ + "': gauge pair index out of range");
        }
      }
    }
  }
}

int StabilizerCode::n_gauge_qubits() const {
  if (!gauge_) return 0;
  std::vector<PauliOperator> group = stabilizers_;
  group.insert(group.end(), gauge_->gauge_generators.begin(), gauge_->gauge_generators.end());
  return (symplectic_rank(group) - symplectic_rank(stabilizers_)) / 2;
}

bool StabilizerCode::is_css() const {
  return std::all_of(stabilizers_.begin(), stabilizers_.end(),
                     [](const PauliOperator& s) { return s.x_mask() == 0 || s.z_mask() == 0; });
}

std::uint64_t StabilizerCode::content_hash() const {
  std::string text = format_code(*this);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool operator==(const StabilizerCode& a, const StabilizerCode& b) {
  if (a.name_ != b.name_ || a.n_qubits_ != b.n_qubits_ || a.stabilizers_ != b.stabilizers_ ||
      a.logical_x_ != b.logical_x_ || a.logical_z_ != b.logical_z_ || a.gauge_.has_value() != b.gauge_.has_value()) {
    return false;
  }
  if (!a.gauge_) return true;
  return a.gauge_->gauge_generators == b.gauge_->gauge_generators &&
         a.gauge_->stabilizer_pairs == b.gauge_->stabilizer_pairs;
}

int symplectic_rank(std::span<const PauliOperator> ops) {
  // Rows as 64-bit vectors: low half X, high half Z.
  std::vector<std::uint64_t> basis;
  for (const auto& op : ops) {
    std::uint64_t v = op.x_mask() | (std::uint64_t{op.z_mask()} << 32);
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return static_cast<int>(basis.size());
}

ValidationReport validate_code(const StabilizerCode& code) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
  const auto& stabs = code.stabilizers();
  const int ns = code.n_stabilizers();

  for (int i = 0; i < ns; ++i) {
    for (int j = i + 1; j < ns; ++j) {
      if (symplectic_product(stabs[i], stabs[j])) {
        fail("stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
      }
    }
  }
  if (symplectic_rank(stabs) != ns) fail("stabilizer generators are not independent");

  const auto& lx = code.logical_x();
  const auto& lz = code.logical_z();
  for (int k = 0; k < ns; ++k) {
    if (symplectic_product(lx, stabs[k])) fail("logical X anticommutes with stabilizer " + std::to_string(k));
    if (symplectic_product(lz, stabs[k])) fail("logical Z anticommutes with stabilizer " + std::to_string(k));
  }
  if (!symplectic_product(lx, lz)) fail("logical X and logical Z commute");

  // A logical must not lie in the stabilizer (or gauge) group.
  std::vector<PauliOperator> group = stabs;
  if (code.gauge()) {
    group.insert(group.end(), code.gauge()->gauge_generators.begin(), code.gauge()->gauge_generators.end());
  }
  int base_rank = symplectic_rank(group);
  for (const auto* logical : {&lx, &lz}) {
    std::vector<PauliOperator> extended = group;
    extended.push_back(*logical);
    if (symplectic_rank(extended) == base_rank) {
      fail(std::string("logical ") + (logical == &lx ? "X" : "Z") + " lies in the stabilizer group");
    }
  }

  int encoded = code.n_qubits() - ns - code.n_gauge_qubits();
  if (encoded != 1) fail("code encodes " + std::to_string(encoded) + " logical qubits, expected 1");

  if (const auto& gauge = code.gauge()) {
    const auto& gens = gauge->gauge_generators;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (symplectic_product(gens[g], lx) || symplectic_product(gens[g], lz)) {
        fail("gauge generator " + std::to_string(g) + " does not commute with the logical operators");
      }
      for (int k = 0; k < ns; ++k) {
        if (symplectic_product(gens[g], stabs[k])) {
          fail("gauge generator " + std::to_string(g) + " anticommutes with stabilizer " + std::to_string(k));
        }
      }
    }
    for (int k = 0; k < ns; ++k) {
      for (auto [i, j] : gauge->stabilizer_pairs[k]) {
        if (multiply(gens[i], gens[j]) != stabs[k]) {
          fail("gauge pair (" + std::to_string(i) + ", " + std::to_string(j) + ") does not multiply to stabilizer " +
               std::to_string(k));
        }
      }
    }
    if (gauge->copies_per_stabilizer() == 0) fail("stabilizers have differing numbers of gauge pairs");
  }
  return report;
}

CodeDistance code_distance(const StabilizerCode& code) {
  const int n = code.n_qubits();
  std::vector<QubitMask> col_x(n, 0), col_z(n, 0);  // syndrome columns of X_q and Z_q
  for (int k = 0; k < code.n_stabilizers(); ++k) {
    const auto& s = code.stabilizers()[k];
    for (int q = 0; q < n; ++q) {
      if ((s.z_mask() >> q) & 1) col_x[q] |= QubitMask{1} << k;
      if ((s.x_mask() >> q) & 1) col_z[q] |= QubitMask{1} << k;
    }
  }
  const auto& lx = code.logical_x();
  const auto& lz = code.logical_z();

  CodeDistance out;
  int remaining = 5;
  auto found = [&](int& slot, int w) {
    if (slot == 0) {
      slot = w;
      --remaining;
    }
  };
  ErrorEnumerator it(n, n);
  QubitMask x, z;
  while (remaining > 0 && it.next(x, z)) {
    QubitMask syndrome = 0;
    for (QubitMask m = x; m; m &= m - 1) syndrome ^= col_x[std::countr_zero(m)];
    for (QubitMask m = z; m; m &= m - 1) syndrome ^= col_z[std::countr_zero(m)];
    if (syndrome != 0) continue;
    int flips_z = symplectic_parity(x, z, lz.x_mask(), lz.z_mask());
    int flips_x = symplectic_parity(x, z, lx.x_mask(), lx.z_mask());
    if (!flips_z && !flips_x) continue;
    int w = std::popcount(x | z);
    found(out.d, w);
    if (flips_z && !flips_x) found(out.d_x, w);
    if (flips_x && !flips_z) found(out.d_z, w);
    if (z == 0) found(out.bit_flip, w);
    if (x == 0) found(out.phase_flip, w);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> reconstruct_stabilizers_from_gauges(const StabilizerCode& code,
                                                                           std::span<const std::uint8_t> gauge_outcomes) {
  const auto& gauge = code.gauge();
  if (!gauge) throw std::invalid_argument("code '" + code.name() + "' has no gauge structure");
  if (gauge_outcomes.size() != gauge->gauge_generators.size()) {
    throw SizeMismatchError("expected " + std::to_string(gauge->gauge_generators.size()) + " gauge outcomes, got " +
                            std::to_string(gauge_outcomes.size()));
  }
  std::vector<std::vector<std::uint8_t>> copies(code.n_stabilizers());
  for (int k = 0; k < code.n_stabilizers(); ++k) {
    for (auto [i, j] : gauge->stabilizer_pairs[k]) {
      copies[k].push_back(static_cast<std::uint8_t>((gauge_outcomes[i] ^ gauge_outcomes[j]) & 1));
    }
  }
  return copies;
}

}  // namespace smallcodes
