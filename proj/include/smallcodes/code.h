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

#ifndef SMALLCODES_CODE_H
#define SMALLCODES_CODE_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smallcodes/pauli.h"

namespace smallcodes {

/// Gauge generators of a subsystem code together with, for every stabilizer
/// generator, the pairs of gauge generators whose product equals it.
struct GaugeStructure {
  std::vector<PauliOperator> gauge_generators;
  /// stabilizer_pairs[k] lists the (i, j) gauge index pairs for stabilizer k.
  std::vector<std::vector<std::array<int, 2>>> stabilizer_pairs;

  /// Number of redundant copies each stabilizer can be reconstructed from.
  /// Zero when pair lists are ragged.
  int copies_per_stabilizer() const;
};

class StabilizerCode {
 public:
  StabilizerCode() = default;
  StabilizerCode(std::string name, int n_qubits, std::vector<PauliOperator> stabilizers, PauliOperator logical_x,
                 PauliOperator logical_z, std::optional<GaugeStructure> gauge = std::nullopt);

  const std::string& name() const { return name_; }
  int n_qubits() const { return n_qubits_; }
  int n_stabilizers() const { return static_cast<int>(stabilizers_.size()); }
  const std::vector<PauliOperator>& stabilizers() const { return stabilizers_; }
  const PauliOperator& logical_x() const { return logical_x_; }
  const PauliOperator& logical_z() const { return logical_z_; }
  const std::optional<GaugeStructure>& gauge() const { return gauge_; }
  bool has_gauge() const { return gauge_.has_value(); }

  /// Number of independent gauge qubits (zero for an ordinary stabilizer code).
  int n_gauge_qubits() const;

  bool is_css() const;

  /// Content hash over the canonical catalog text of this code (FNV-1a 64).
  std::uint64_t content_hash() const;

  friend bool operator==(const StabilizerCode&, const StabilizerCode&);

 private:
  std::string name_;
  int n_qubits_ = 0;
  std::vector<PauliOperator> stabilizers_;
  PauliOperator logical_x_;
  PauliOperator logical_z_;
  std::optional<GaugeStructure> gauge_;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks commutation, independence, logical-operator and gauge-structure
/// invariants. Every failed check is listed; nothing throws.
ValidationReport validate_code(const StabilizerCode& code);

/// Rank over GF(2) of operators written as 2n-bit symplectic vectors.
int symplectic_rank(std::span<const PauliOperator> ops);

struct CodeDistance {
  int d_x = 0;  ///< Minimum weight of an operator acting as logical X.
  int d_z = 0;  ///< Minimum weight of an operator acting as logical Z.
  int d = 0;    ///< Minimum weight of any nontrivial logical.
  /// Restricted to pure bit-flip (X-type) and pure phase-flip (Z-type) operators.
  int bit_flip = 0;
  int phase_flip = 0;
};

/// Exhaustive minimum-weight logical search. Operators are scanned in
/// increasing weight, so the search stops as soon as all distances are found.
CodeDistance code_distance(const StabilizerCode& code);

/// Three-copy (in general, r-copy) reconstruction of the stabilizer syndrome
/// from gauge outcomes. Result[k][j] is copy j of stabilizer k: the XOR of the
/// two gauge outcome bits named in pair j of stabilizer k.
std::vector<std::vector<std::uint8_t>> reconstruct_stabilizers_from_gauges(const StabilizerCode& code,
                                                                           std::span<const std::uint8_t> gauge_outcomes);

}  // namespace smallcodes

#endif  // SMALLCODES_CODE_H
