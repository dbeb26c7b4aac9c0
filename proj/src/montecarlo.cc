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

#include "smallcodes/montecarlo.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>
#include <vector>

namespace smallcodes {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(splitmix64(splitmix64(seed) ^ (stream * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull))) {}

std::uint64_t CounterRng::next() {
  std::uint64_t z = splitmix64(state_);
  state_ += 0x9e3779b97f4a7c15ull;
  return z;
}

PauliOperator sample_error(const NoiseModel& noise, int n_qubits, CounterRng& rng) {
  const double px = noise.rates.x;
  const double pxy = px + noise.rates.y;
  const double pany = pxy + noise.rates.z;
  QubitMask x = 0, z = 0;
  for (int q = 0; q < n_qubits; ++q) {
    double u = rng.uniform();
    if (u >= pany) continue;
    QubitMask bit = QubitMask{1} << q;
    if (u < px) {
      x |= bit;
    } else if (u < pxy) {
      x |= bit;
      z |= bit;
    } else {
      z |= bit;
    }
  }
  return PauliOperator(n_qubits, x, z);
}

std::uint64_t sample_measurement_flips(int n_bits, double q, CounterRng& rng) {
  if (n_bits < 0 || n_bits > 64) throw std::invalid_argument("flip mask holds at most 64 bits");
  if (!(q >= 0 && q < 1)) throw InvalidNoiseError("measurement error rate outside [0, 1)");
  std::uint64_t mask = 0;
  if (q == 0) return mask;
  for (int b = 0; b < n_bits; ++b) {
    if (rng.uniform() < q) mask |= std::uint64_t{1} << b;
  }
  return mask;
}

McEstimate estimate_logical_error_rate(const StabilizerCode& code, const DecoderTable& table, const NoiseModel& noise,
                                       std::uint64_t trials, std::uint64_t seed, const McOptions& options) {
  if (table.code_hash() != code.content_hash()) throw std::invalid_argument("table does not belong to this code");
  const LookupDecoder decoder(table, noise, options.scoring);
  const int n = code.n_qubits();
  const int ns = code.n_stabilizers();
  const int copies = decoder.copies();
  const std::uint64_t copy_mask = (std::uint64_t{1} << copies) - 1;
  const bool class_only = options.scoring == NoisyScoring::kPosterior && noise.q > 0;

  auto run = [&](std::uint64_t first, std::uint64_t last) {
    std::uint64_t failures = 0;
    for (std::uint64_t t = first; t < last; ++t) {
      CounterRng rng(seed, t);
      const PauliOperator e = sample_error(noise, n, rng);
      const Syndrome s = compute_syndrome(code, e);
      const std::uint64_t flips = sample_measurement_flips(ns * copies, noise.q, rng);
      Observation obs = 0;
      if (copies == 1) {
        obs = s ^ flips;
      } else {
        for (int k = ns; k-- > 0;) {
          int flipped = std::popcount((flips >> (k * copies)) & copy_mask);
          int minus = ((s >> k) & 1) ? copies - flipped : flipped;
          obs = obs * (copies + 1) + minus;
        }
      }
      const LogicalClass decided = decoder.logical(obs);
      if (class_only) {
        if (decided != classify_logical(code, e, table.reference_correction(s))) ++failures;
        continue;
      }
      const Syndrome estimate = noise.q == 0 ? s : decoder.syndrome(obs);
      const PauliOperator residual =
          table.reference_correction(estimate) * logical_operator(code, decided) * e;
      if (compute_syndrome(code, residual) != 0 ||
          symplectic_product(residual, code.logical_x()) || symplectic_product(residual, code.logical_z())) {
        ++failures;
      }
    }
    return failures;
  };

  const int threads = static_cast<int>(std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(1, trials)));
  std::uint64_t failures = 0;
  if (threads == 1) {
    failures = run(0, trials);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> workers;
    for (int w = 0; w < threads; ++w) {
      std::uint64_t first = trials * w / threads, last = trials * (w + 1) / threads;
      workers.emplace_back([&, w, first, last] { partial[w] = run(first, last); });
    }
    for (auto& th : workers) th.join();
    for (auto f : partial) failures += f;
  }

  McEstimate est;
  est.trials = trials;
  est.failures = failures;
  est.seed = seed;
  if (trials > 0) {
    est.p_L_hat = static_cast<double>(failures) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.p_L_hat * (1 - est.p_L_hat) / static_cast<double>(trials));
  }
  return est;
}

}  // namespace smallcodes
