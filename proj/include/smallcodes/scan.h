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

#ifndef SMALLCODES_SCAN_H
#define SMALLCODES_SCAN_H

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcodes/decoder.h"
#include "smallcodes/metrics.h"
#include "smallcodes/noise.h"

namespace smallcodes {

enum class Spacing { kLinear, kLog };

Spacing parse_spacing(std::string_view text);

struct GridAxis {
  double min = 0;
  double max = 0;
  int steps = 1;
  Spacing spacing = Spacing::kLinear;

  /// Grid values in increasing order; a single step yields {min}.
  std::vector<double> values() const;
};

/// Exact for N_Q <= 13, otherwise 6 (lower bound).
int default_n_max(const StabilizerCode& code);

struct SweepSpec {
  std::string code;
  NoiseKind noise = NoiseKind::kDepolarizing;
  double alpha = 1;
  GridAxis p{1e-4, 0.2, 25, Spacing::kLog};
  GridAxis q{0, 0, 1, Spacing::kLinear};
  std::optional<int> n_max;
  std::optional<double> gate_overhead;
  NoisyScoring scoring = NoisyScoring::kPosterior;
  int threads = 1;
};

/// Throws std::invalid_argument for empty or out-of-range axes.
void validate_sweep(const SweepSpec& spec);

struct SweepRow {
  std::string code;
  NoiseKind noise = NoiseKind::kDepolarizing;
  double alpha = 1;
  double p = 0;
  double q = 0;
  int n_max = 0;
  EvaluationResult result;
};

std::string csv_header();
std::string csv_line(const SweepRow& row);
/// Shortest text that reads back to the same double.
std::string format_double(double v);

SweepRow evaluate_point(const DecoderTable& table, NoiseKind kind, double alpha, double p, double q,
                        const EvalOptions& options = {});

/// Rows ordered q-major, then p, both increasing.
std::vector<SweepRow> sweep_physical_rate(const SweepSpec& spec, const DecoderTable& table);

/// C at one point; +infinity when p_L = 0.
double correcting_power_at(const DecoderTable& table, NoiseKind kind, double alpha, double p, double q,
                           NoisyScoring scoring = NoisyScoring::kPosterior);

class NoCrossoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CrossoverQuery {
  NoiseKind kind = NoiseKind::kDepolarizing;
  double alpha = 1;
  double q = 0;
  double target = 1;
  double p_lo = 1e-4;
  double p_hi = 0.3;
  double tolerance = 1e-5;
  NoisyScoring scoring = NoisyScoring::kPosterior;
};

/// Bisection on p for C(p) = target inside [p_lo, p_hi].
double find_crossover(const DecoderTable& table, const CrossoverQuery& query);

struct ContourPoint {
  double p = 0;
  double q = 0;
  /// Field value at the point (C, or C_a - C_b).
  double value = 0;
};

using Polyline = std::vector<ContourPoint>;

/// Level-zero polylines of a field sampled on a (p, q) grid, values indexed
/// [iq * p_grid.size() + ip]. Crossing points are found by linear interpolation
/// and then refined along their cell edge with `field` until |field| <= tolerance.
std::vector<Polyline> extract_contours(const std::vector<double>& p_grid, const std::vector<double>& q_grid,
                                       const std::vector<double>& values,
                                       const std::function<double(double, double)>& field, double tolerance);

struct RegionQuery {
  NoiseKind kind = NoiseKind::kDepolarizing;
  double alpha = 1;
  std::vector<double> p_grid;
  std::vector<double> q_grid;
  double target = 1;
  double tolerance = 1e-6;
  NoisyScoring scoring = NoisyScoring::kPosterior;
  int threads = 1;
};

struct RegionResult {
  std::vector<double> p_grid;
  std::vector<double> q_grid;
  /// Grid evaluations, q-major.
  std::vector<SweepRow> grid;
  double target = 1;
  std::vector<Polyline> contours;

  /// Largest q reached by the C = target contour (0 when there is none).
  double max_q() const;
};

RegionResult scan_region(const DecoderTable& table, const RegionQuery& query);

struct CompareResult {
  std::vector<double> p_grid;
  std::vector<double> q_grid;
  std::vector<double> C_a;
  std::vector<double> C_b;
  std::vector<Polyline> contours;
  /// Every grid point has |C_a - C_b| <= tolerance.
  bool degenerate = false;
  bool a_better_somewhere = false;
  bool b_better_somewhere = false;
};

CompareResult compare_codes(const DecoderTable& table_a, const DecoderTable& table_b, const RegionQuery& query);

}  // namespace smallcodes

#endif  // SMALLCODES_SCAN_H
