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

#include "smallcodes/metrics.h"

#include <algorithm>

namespace smallcodes {

SuccessProbability success_probability(const DecoderTable& table, const NoiseModel& noise, NoisyScoring scoring) {
  return noise.q == 0 ? success_probability_perfect(table, noise) : success_probability_noisy(table, noise, scoring);
}

EvaluationResult evaluate(const DecoderTable& table, const NoiseModel& noise, const EvalOptions& options) {
  SuccessProbability sp = success_probability(table, noise, options.scoring);
  EvaluationResult r;
  r.P_d = sp.P_d;
  r.p_L = sp.p_L;
  r.lower_bound = sp.lower_bound;
  r.C = correcting_power(std::min(1.0, std::max(0.0, sp.p_L)), noise);
  if (options.gate_overhead) {
    r.C_prime = modified_correcting_power(noise, table, *options.gate_overhead, options.scoring);
  }
  return r;
}

CorrectingPower modified_correcting_power(const NoiseModel& noise, const DecoderTable& table, double gate_overhead,
                                          NoisyScoring scoring) {
  if (!(gate_overhead >= 0)) throw InvalidNoiseError("gate overhead must be >= 0");
  if (noise.p + gate_overhead > 1) throw InvalidNoiseError("p + gate overhead exceeds 1");
  NoiseModel inflated = noise.with_physical_rate(noise.p + gate_overhead);
  SuccessProbability sp = success_probability(table, inflated, scoring);
  return correcting_power(std::min(1.0, std::max(0.0, sp.p_L)), noise);
}

}  // namespace smallcodes
