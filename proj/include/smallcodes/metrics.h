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

#ifndef SMALLCODES_METRICS_H
#define SMALLCODES_METRICS_H

#include <optional>

#include "smallcodes/decoder.h"
#include "smallcodes/noise.h"

namespace smallcodes {

inline constexpr double kDefaultGateOverhead = 0.003;

struct EvaluationResult {
  double P_d = 1;
  double p_L = 0;
  CorrectingPower C = CorrectingPower::unbounded();
  std::optional<CorrectingPower> C_prime;
  bool lower_bound = false;
};

struct EvalOptions {
  NoisyScoring scoring = NoisyScoring::kPosterior;
  /// When set, C' is evaluated with this overhead added to p.
  std::optional<double> gate_overhead;
};

/// Logical error rate at this noise setting: perfect measurement when q = 0.
SuccessProbability success_probability(const DecoderTable& table, const NoiseModel& noise,
                                       NoisyScoring scoring = NoisyScoring::kPosterior);

EvaluationResult evaluate(const DecoderTable& table, const NoiseModel& noise, const EvalOptions& options = {});

/// C' = (unencoded failure rate at p, q) / p_L(p + gate_overhead, q), same channel shape.
CorrectingPower modified_correcting_power(const NoiseModel& noise, const DecoderTable& table,
                                          double gate_overhead = kDefaultGateOverhead,
                                          NoisyScoring scoring = NoisyScoring::kPosterior);

}  // namespace smallcodes

#endif  // SMALLCODES_METRICS_H
