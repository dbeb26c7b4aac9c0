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

#ifndef SMALLCODES_MONTECARLO_H
#define SMALLCODES_MONTECARLO_H

#include <cstdint>

#include "smallcodes/code.h"
#include "smallcodes/decoder.h"
#include "smallcodes/noise.h"

namespace smallcodes {

/// Counter-based generator: the stream for (seed, stream) is a fixed function
/// of both, so trial t draws the same numbers whatever order trials run in.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// I.i.d. Pauli error with the channel's per-Pauli rates.
PauliOperator sample_error(const NoiseModel& noise, int n_qubits, CounterRng& rng);

/// Each of the n_bits (<= 64) bits set independently with probability q.
std::uint64_t sample_measurement_flips(int n_bits, double q, CounterRng& rng);

struct McEstimate {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double p_L_hat = 0;
  double std_err = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  NoisyScoring scoring = NoisyScoring::kPosterior;
  int threads = 1;
};

/// Samples error and measurement record, decodes with the lookup table and
/// counts logical failures. Posterior scoring with q > 0 fails when the decided
/// class differs from the error's class relative to C*(true syndrome); otherwise
/// the correction is applied and the residual must be a stabilizer.
McEstimate estimate_logical_error_rate(const StabilizerCode& code, const DecoderTable& table, const NoiseModel& noise,
                                       std::uint64_t trials, std::uint64_t seed, const McOptions& options = {});

}  // namespace smallcodes

#endif  // SMALLCODES_MONTECARLO_H
