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

#include "smallcodes/noise.h"

#include <cmath>
#include <limits>
#include <sstream>

namespace smallcodes {

namespace {

void require_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << what << " = " << v << " outside [0, 1]";
    throw InvalidNoiseError(msg.str());
  }
}

void require_measurement_rate(double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    std::ostringstream msg;
    msg << "measurement error rate q = " << q << " outside [0, 1)";
    throw InvalidNoiseError(msg.str());
  }
}

}  // namespace

std::string_view to_string(NoiseKind kind) {
  return kind == NoiseKind::kDepolarizing ? "depolarizing" : "independent";
}

NoiseKind parse_noise_kind(std::string_view text) {
  if (text == "depolarizing" || text == "depol") return NoiseKind::kDepolarizing;
  if (text == "independent" || text == "indep") return NoiseKind::kIndependent;
  throw InvalidNoiseError("unknown noise kind '" + std::string(text) + "'");
}

NoiseModel make_depolarizing(double p, double q) {
  require_probability(p, "p");
  require_measurement_rate(q);
  NoiseModel m;
  m.kind = NoiseKind::kDepolarizing;
  m.p = p;
  m.rates = {p / 3, p / 3, p / 3};
  m.q = q;
  return m;
}

NoiseModel make_independent(double p_prime_x, double alpha, double q) {
  require_probability(p_prime_x, "p'_x");
  if (!(alpha >= 0.0) || std::isinf(alpha)) throw InvalidNoiseError("alpha must be finite and >= 0");
  double pz = alpha * p_prime_x;
  require_probability(pz, "p'_z = alpha p'_x");
  require_measurement_rate(q);
  NoiseModel m;
  m.kind = NoiseKind::kIndependent;
  m.p_prime_x = p_prime_x;
  m.p_prime_z = pz;
  m.alpha = alpha;
  // 1 - (1-a)(1-b) without cancellation at small rates.
  m.p = p_prime_x + pz - p_prime_x * pz;
  m.rates = {p_prime_x * (1 - pz), p_prime_x * pz, pz * (1 - p_prime_x)};
  m.q = q;
  return m;
}

NoiseModel make_independent_total(double p, double alpha, double q) {
  require_probability(p, "p");
  if (!(alpha >= 0.0) || std::isinf(alpha)) throw InvalidNoiseError("alpha must be finite and >= 0");
  // Smaller root of alpha x^2 - (1+alpha) x + p = 0, written to avoid cancellation.
  double x;
  if (alpha == 0) {
    x = p;
  } else {
    double b = 1 + alpha;
    double disc = b * b - 4 * alpha * p;
    if (disc < 0) throw InvalidNoiseError("total rate unreachable for this alpha");
    x = 2 * p / (b + std::sqrt(disc));
  }
  return make_independent(x, alpha, q);
}

NoiseModel make_noise(NoiseKind kind, double p, double alpha, double q) {
  if (kind == NoiseKind::kDepolarizing) {
    NoiseModel m = make_depolarizing(p, q);
    m.alpha = alpha;
    return m;
  }
  return make_independent_total(p, alpha, q);
}

NoiseModel NoiseModel::with_physical_rate(double p_total) const { return make_noise(kind, p_total, alpha, q); }

NoiseModel NoiseModel::with_measurement_rate(double q_new) const {
  require_measurement_rate(q_new);
  NoiseModel m = *this;
  m.q = q_new;
  return m;
}

double CorrectingPower::value() const {
  if (!bounded_) throw std::logic_error("correcting power is unbounded (p_L = 0)");
  return value_;
}

double CorrectingPower::value_or_inf() const {
  return bounded_ ? value_ : std::numeric_limits<double>::infinity();
}

std::string CorrectingPower::str() const {
  if (!bounded_) return "inf";
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

double unencoded_failure_rate(double p, double q) { return p + q - p * q; }

CorrectingPower correcting_power(double p_logical, const NoiseModel& noise) {
  if (!(p_logical >= 0.0 && p_logical <= 1.0)) {
    std::ostringstream msg;
    msg << "logical error rate " << p_logical << " outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
  if (p_logical == 0.0) return CorrectingPower::unbounded();
  double numerator = noise.q == 0 ? noise.p : unencoded_failure_rate(noise.p, noise.q);
  return CorrectingPower::bounded(numerator / p_logical);
}

}  // namespace smallcodes
