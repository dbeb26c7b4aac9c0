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

#ifndef SMALLCODES_DECODER_H
#define SMALLCODES_DECODER_H

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <vector>

#include "smallcodes/code.h"
#include "smallcodes/noise.h"
#include "smallcodes/pauli.h"

namespace smallcodes {

/// Bit k set when stabilizer generator k reports -1.
using Syndrome = std::uint32_t;

/// Coset label of a residual; bit 0 = anticommutes with logical Z, bit 1 = with logical X.
enum class LogicalClass : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline constexpr std::array<LogicalClass, 4> kLogicalClasses = {LogicalClass::I, LogicalClass::X, LogicalClass::Z,
                                                                LogicalClass::Y};

char to_char(LogicalClass l);
LogicalClass parse_logical_class(char c);

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyndromeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Syndrome compute_syndrome(const StabilizerCode& code, const PauliOperator& e);

/// Class of e relative to `reference`, which must share its syndrome.
LogicalClass classify_logical(const StabilizerCode& code, const PauliOperator& e, const PauliOperator& reference);

/// Logical representative of a class: I, logical X, logical Z or their product.
PauliOperator logical_operator(const StabilizerCode& code, LogicalClass l);

/// Sparse (n_x, n_y, n_z) -> count map.
struct CoefficientTensor {
  std::map<std::tuple<int, int, int>, std::uint64_t> counts;

  std::uint64_t count(const WeightProfile& w) const;
  /// Sum over keys with n_x + n_y + n_z = weight.
  std::uint64_t shell_sum(int weight) const;
  std::uint64_t total() const;
  friend bool operator==(const CoefficientTensor&, const CoefficientTensor&) = default;
};

struct BuildConfig {
  /// Truncation weight; empty means exact (n_max = N_Q).
  std::optional<int> n_max;
  int parallel_partitions = 1;
};

/// Dense position of a weight profile among all profiles of total weight <= some bound.
std::size_t profile_index(int n_x, int n_y, int n_z);
/// Number of profiles with total weight <= n_max.
std::size_t profile_count(int n_max);

/// Precomputed decoder: per syndrome, reference correction C*(s) and one
/// coefficient tensor per logical class.
class DecoderTable {
 public:
  DecoderTable() = default;
  /// Assembles a table from raw parts; `counts` is laid out [s][l][profile_index].
  DecoderTable(StabilizerCode code, int n_max, std::vector<std::uint32_t> counts,
               std::vector<PauliOperator> reference_corrections);

  const StabilizerCode& code() const { return code_; }
  std::uint64_t code_hash() const { return code_hash_; }
  int n_max() const { return n_max_; }
  bool exact() const { return n_max_ == code_.n_qubits(); }
  int n_stabilizers() const { return code_.n_stabilizers(); }
  std::size_t n_syndromes() const { return std::size_t{1} << code_.n_stabilizers(); }
  std::size_t n_profiles() const { return n_profiles_; }

  const PauliOperator& reference_correction(Syndrome s) const { return cstar_.at(s); }
  const std::vector<PauliOperator>& reference_corrections() const { return cstar_; }

  std::uint64_t count(Syndrome s, LogicalClass l, const WeightProfile& w) const;
  CoefficientTensor tensor(Syndrome s, LogicalClass l) const;
  /// Raw counts for (s, l), indexed by profile_index.
  const std::uint32_t* counts(Syndrome s, LogicalClass l) const {
    return counts_.data() + (static_cast<std::size_t>(s) * 4 + static_cast<int>(l)) * n_profiles_;
  }
  std::uint64_t total_count() const;

  friend bool operator==(const DecoderTable&, const DecoderTable&);

 private:
  StabilizerCode code_;
  std::uint64_t code_hash_ = 0;
  int n_max_ = 0;
  std::size_t n_profiles_ = 1;
  std::vector<std::uint32_t> counts_;
  std::vector<PauliOperator> cstar_;
};

DecoderTable build_decoder_table(const StabilizerCode& code, const BuildConfig& cfg = {});

/// (1 - p_x - p_y - p_z)^(N_Q - n) p_x^n_x p_y^n_y p_z^n_z.
double error_config_probability(const WeightProfile& profile, int n_qubits, const NoiseModel& noise);

/// Total probability mass of errors heavier than n_max.
double truncated_mass(int n_qubits, int n_max, const NoiseModel& noise);

/// Class masses M[s][l] under the physical channel (q ignored).
std::vector<std::array<double, 4>> class_masses(const DecoderTable& table, const NoiseModel& noise);

/// How measured stabilizer data is scored when q > 0.
enum class NoisyScoring {
  /// Sum over true syndromes weighted by the measurement channel, then max over class.
  kPosterior,
  /// The syndrome is estimated from the measurement record alone (bit, or copy
  /// majority) and decoding proceeds as if it were exact; success needs the
  /// estimate to be right and the class to match.
  kCommitted,
};

std::string_view to_string(NoisyScoring s);
NoisyScoring parse_noisy_scoring(std::string_view text);

struct SuccessProbability {
  double P_d = 1;
  /// Computed directly rather than as 1 - P_d to keep small rates accurate.
  double p_L = 0;
  bool lower_bound = false;
};

SuccessProbability success_probability_perfect(const DecoderTable& table, const NoiseModel& noise);
SuccessProbability success_probability_noisy(const DecoderTable& table, const NoiseModel& noise,
                                             NoisyScoring scoring = NoisyScoring::kPosterior);

/// Copies of each stabilizer outcome the decoder sees: 3 for a gauge code with
/// three pairs per stabilizer, otherwise 1.
int measurement_copies(const StabilizerCode& code);

/// Probability that the majority of `copies` independent reports is wrong.
double majority_error_rate(int copies, double q);

/// Observation index: digit k (base copies+1) is the number of copies of
/// stabilizer k that report -1. With one copy this is the syndrome itself.
using Observation = std::uint64_t;

Observation observation_from_counts(const std::vector<int>& minus_counts, int copies);

struct Decision {
  Syndrome syndrome = 0;  ///< Syndrome interpretation used for C*(s).
  LogicalClass logical = LogicalClass::I;
};

/// Argmax lookup over all observations for one noise setting.
class LookupDecoder {
 public:
  LookupDecoder(const DecoderTable& table, const NoiseModel& noise, NoisyScoring scoring = NoisyScoring::kPosterior);

  int copies() const { return copies_; }
  NoisyScoring scoring() const { return scoring_; }
  std::size_t n_observations() const { return logical_.size(); }
  LogicalClass logical(Observation obs) const { return static_cast<LogicalClass>(logical_.at(obs)); }
  /// Syndrome interpretation of an observation. Posterior scoring picks the
  /// most likely true syndrome within the decided class (computed on demand).
  Syndrome syndrome(Observation obs) const;
  Decision decide(Observation obs) const { return {syndrome(obs), logical(obs)}; }
  /// C*(s) times the logical representative of the decided class.
  PauliOperator correction(Observation obs) const;

 private:
  double likelihood(Observation obs, Syndrome s) const;

  const DecoderTable* table_;
  NoisyScoring scoring_;
  int copies_;
  std::vector<std::array<double, 4>> masses_;
  std::vector<std::array<double, 2>> report_;  // report_[m][b]: P(m of the copies read -1 | true bit b)
  std::vector<std::uint8_t> logical_;
};

PauliOperator decode_lookup(const DecoderTable& table, Observation observed, const NoiseModel& noise,
                            NoisyScoring scoring = NoisyScoring::kPosterior);

}  // namespace smallcodes

#endif  // SMALLCODES_DECODER_H
