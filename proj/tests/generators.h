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

#ifndef SMALLCODES_TESTS_GENERATORS_H
#define SMALLCODES_TESTS_GENERATORS_H

#include <cstdint>
#include <bit>
#include <random>

#include "smallcodes/noise.h"
#include "smallcodes/pauli.h"

namespace smallcodes::testing {

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  PauliOperator pauli(int n) {
    QubitMask m = low_mask(n);
    return PauliOperator(n, static_cast<QubitMask>(rng_()) & m, static_cast<QubitMask>(rng_()) & m);
  }

  PauliOperator pauli_of_weight(int n, int w) {
    QubitMask x = 0, z = 0, used = 0;
    while (std::popcount(used) < w) {
      int q = integer(0, n - 1);
      if ((used >> q) & 1) continue;
      used |= QubitMask{1} << q;
      switch (integer(0, 2)) {
        case 0: x |= QubitMask{1} << q; break;
        case 1: z |= QubitMask{1} << q; break;
        default: x |= QubitMask{1} << q; z |= QubitMask{1} << q;
      }
    }
    return PauliOperator(n, x, z);
  }

  /// Depolarizing or independent channel with total rate in [lo, hi].
  NoiseModel noise(double lo, double hi) {
    double p = uniform(lo, hi);
    if (integer(0, 1) == 0) return make_depolarizing(p);
    return make_independent_total(p, uniform(0.0, 6.0));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace smallcodes::testing

#endif  // SMALLCODES_TESTS_GENERATORS_H
