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

#ifndef SMALLCODES_NOISE_H
#define SMALLCODES_NOISE_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace smallcodes {

class InvalidNoiseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NoiseKind { kDepolarizing, kIndependent };

std::string_view to_string(NoiseKind kind);
/// Accepts "depolarizing"/"depol" and "independent"/"indep".
NoiseKind parse_noise_kind(std::string_view text);

/// Single-qubit Pauli rates of an i.i.d. channel.
struct PauliRates {
  double x = 0;
  double y = 0;
  double z = 0;

  double any() const { return x + y + z; }
  /// Probability of no error on a qubit.
  double none() const { return 1.0 - x - y - z; }
};

/// Physical i.i.d. channel plus stabilizer measurement error rate q.
///
/// Depolarizing: x = y = z = p/3. Independent: X and Z flips with
/// probabilities p'_x and p'_z = alpha p'_x, so p = 1 - (1-p'_x)(1-p'_z),
/// with x = p'_x (1-p'_z), z = p'_z (1-p'_x), y = p'_x p'_z.
struct NoiseModel {
  NoiseKind kind = NoiseKind::kDepolarizing;
  double p = 0;
  double p_prime_x = 0;
  double p_prime_z = 0;
  /// Stored for every kind so sweep records share one schema; unused when depolarizing.
  double alpha = 1;
  PauliRates rates;
  double q = 0;

  /// Same channel shape (kind, alpha) and q, rescaled to total rate `p_total`.
  NoiseModel with_physical_rate(double p_total) const;
  NoiseModel with_measurement_rate(double q_new) const;
};

NoiseModel make_depolarizing(double p, double q = 0);
NoiseModel make_independent(double p_prime_x, double alpha, double q = 0);
/// Independent channel parameterised by its total per-qubit rate p.
NoiseModel make_independent_total(double p, double alpha, double q = 0);
/// Shape-generic constructor used by sweeps.
NoiseModel make_noise(NoiseKind kind, double p, double alpha, double q = 0);

/// Correcting power C = (unencoded failure rate) / p_L, where the unencoded
/// failure rate is p for perfect measurement and 1 - (1-p)(1-q) otherwise.
/// p_L = 0 gives an unbounded result rather than a number.
class CorrectingPower {
 public:
  static CorrectingPower bounded(double value) { return CorrectingPower(value, true); }
  static CorrectingPower unbounded() { return CorrectingPower(0, false); }

  bool is_bounded() const { return bounded_; }
  /// Throws std::logic_error when unbounded.
  double value() const;
  /// Value, or +infinity when unbounded; for comparisons and root finding.
  double value_or_inf() const;
  std::string str() const;

 private:
  CorrectingPower(double v, bool b) : value_(v), bounded_(b) {}
  double value_;
  bool bounded_;
};

/// 1 - (1-p)(1-q), computed without cancellation.
double unencoded_failure_rate(double p, double q);

CorrectingPower correcting_power(double p_logical, const NoiseModel& noise);

}  // namespace smallcodes

#endif  // SMALLCODES_NOISE_H
