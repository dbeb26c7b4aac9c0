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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "generators.h"
#include "smallcodes/catalog.h"
#include "smallcodes/decoder.h"
#include "smallcodes/metrics.h"

namespace smallcodes {
namespace {

using testing::Gen;

// Brute-force oracle: class masses from every Pauli on the code.
std::vector<std::array<double, 4>> brute_masses(const StabilizerCode& code, const NoiseModel& noise) {
  std::size_t ns = std::size_t{1} << code.n_stabilizers();
  std::vector<std::array<double, 4>> masses(ns, {0, 0, 0, 0});
  std::vector<PauliOperator> ref(ns);
  std::vector<bool> seen(ns, false);
  ErrorEnumerator en(code.n_qubits(), code.n_qubits());
  for (const PauliOperator& e : en) {
    Syndrome s = compute_syndrome(code, e);
    if (!seen[s]) {
      seen[s] = true;
      ref[s] = e;
    }
    double prob = 1;
    for (int q = 0; q < code.n_qubits(); ++q) {
      switch (e.at(q)) {
        case 'X': prob *= noise.rates.x; break;
        case 'Y': prob *= noise.rates.y; break;
        case 'Z': prob *= noise.rates.z; break;
        default: prob *= noise.rates.none();
      }
    }
    masses[s][static_cast<int>(classify_logical(code, e, ref[s]))] += prob;
  }
  return masses;
}

double brute_success(const StabilizerCode& code, const NoiseModel& noise) {
  double total = 0;
  for (const auto& m : brute_masses(code, noise)) total += std::max(std::max(m[0], m[1]), std::max(m[2], m[3]));
  return total;
}

double multinomial(int n, int a, int b, int c) {
  return std::tgamma(n + 1.0) / (std::tgamma(a + 1.0) * std::tgamma(b + 1.0) * std::tgamma(c + 1.0) *
                                 std::tgamma(n - a - b - c + 1.0));
}

StabilizerCode long_repetition_code(int n) {
  std::vector<PauliOperator> gens;
  for (int i = 0; i + 1 < n; ++i) gens.emplace_back(n, 0, QubitMask{3} << i);
  return StabilizerCode("REP" + std::to_string(n), n, gens, PauliOperator(n, low_mask(n), 0), PauliOperator(n, 0, 1));
}

bool is_logically_trivial(const StabilizerCode& code, const PauliOperator& residual) {
  return compute_syndrome(code, residual) == 0 && symplectic_product(residual, code.logical_x()) == 0 &&
         symplectic_product(residual, code.logical_z()) == 0;
}

TEST(Syndrome, Examples) {
  const StabilizerCode& rep = get_code("REP3");
  EXPECT_EQ(compute_syndrome(rep, PauliOperator::from_string("III")), 0u);
  EXPECT_EQ(compute_syndrome(rep, PauliOperator::from_string("XII")), 1u);
  EXPECT_EQ(compute_syndrome(rep, PauliOperator::from_string("IXI")), 3u);
  EXPECT_EQ(compute_syndrome(rep, PauliOperator::from_string("ZZZ")), 0u);
  EXPECT_THROW(compute_syndrome(rep, PauliOperator::from_string("XI")), SizeMismatchError);
}

TEST(Syndrome, IsLinear) {
  Gen g(41);
  const StabilizerCode& code = get_code("S13");
  for (int trial = 0; trial < 500; ++trial) {
    PauliOperator a = g.pauli(13), b = g.pauli(13);
    EXPECT_EQ(compute_syndrome(code, a * b), compute_syndrome(code, a) ^ compute_syndrome(code, b));
  }
}

TEST(Classify, Examples) {
  const StabilizerCode& rep = get_code("REP3");
  PauliOperator id = PauliOperator::identity(3);
  EXPECT_EQ(classify_logical(rep, PauliOperator::from_string("XXX"), id), LogicalClass::X);
  EXPECT_EQ(classify_logical(rep, PauliOperator::from_string("ZII"), id), LogicalClass::Z);
  EXPECT_EQ(classify_logical(rep, PauliOperator::from_string("YXX"), id), LogicalClass::Y);
  EXPECT_THROW(classify_logical(rep, PauliOperator::from_string("XII"), id), SyndromeMismatchError);
}

TEST(Classify, StabilizerMultiplesShareClass) {
  Gen g(42);
  for (const char* name : {"S9", "C11", "GCC15"}) {
    const StabilizerCode& code = get_code(name);
    int n = code.n_qubits();
    for (int trial = 0; trial < 200; ++trial) {
      PauliOperator e = g.pauli(n);
      PauliOperator s = PauliOperator::identity(n);
      for (const auto& gen : code.stabilizers()) {
        if (g.integer(0, 1)) s = s * gen;
      }
      EXPECT_EQ(compute_syndrome(code, e * s), compute_syndrome(code, e));
      EXPECT_EQ(classify_logical(code, e * s, e), LogicalClass::I) << name;
      for (LogicalClass l : kLogicalClasses) {
        EXPECT_EQ(classify_logical(code, e * logical_operator(code, l), e), l);
      }
    }
  }
}

TEST(Build, RepetitionTableMatchesBruteForce) {
  const StabilizerCode& rep = get_code("REP3");
  DecoderTable table = build_decoder_table(rep);
  EXPECT_TRUE(table.exact());
  std::map<std::tuple<Syndrome, int, int, int, int>, std::uint64_t> oracle;
  ErrorEnumerator en(3, 3);
  for (const PauliOperator& e : en) {
    Syndrome s = compute_syndrome(rep, e);
    WeightProfile w = weight_profile(e);
    int l = static_cast<int>(classify_logical(rep, e, table.reference_correction(s)));
    ++oracle[{s, l, w.n_x, w.n_y, w.n_z}];
  }
  std::uint64_t total = 0;
  for (Syndrome s = 0; s < 4; ++s) {
    for (LogicalClass l : kLogicalClasses) {
      for (const auto& [key, count] : table.tensor(s, l).counts) {
        auto [nx, ny, nz] = key;
        EXPECT_EQ(count, (oracle[{s, static_cast<int>(l), nx, ny, nz}])) << s << to_char(l);
        total += count;
      }
    }
  }
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(table.reference_correction(1).str(), "XII");
}

TEST(Build, ZeroTruncationHoldsOnlyIdentity) {
  DecoderTable table = build_decoder_table(get_code("S9"), {.n_max = 0});
  EXPECT_EQ(table.total_count(), 1u);
  EXPECT_EQ(table.count(0, LogicalClass::I, {0, 0, 0}), 1u);
}

TEST(Build, TableInvariants) {
  for (const char* name : {"S5", "S8", "S9", "C7", "C11", "S13"}) {
    const StabilizerCode& code = get_code(name);
    int n = code.n_qubits();
    DecoderTable table = build_decoder_table(code);
    EXPECT_EQ(table.total_count(), std::uint64_t{1} << (2 * n)) << name;
    EXPECT_TRUE(table.reference_correction(0).is_identity());
    for (Syndrome s = 0; s < table.n_syndromes(); ++s) {
      EXPECT_EQ(compute_syndrome(code, table.reference_correction(s)), s);
    }
    // Every profile shell sums to its multinomial over syndromes and classes.
    for (int nx = 0; nx <= n; ++nx) {
      for (int ny = 0; nx + ny <= n; ++ny) {
        for (int nz = 0; nx + ny + nz <= n; ++nz) {
          std::uint64_t sum = 0;
          for (Syndrome s = 0; s < table.n_syndromes(); ++s) {
            for (LogicalClass l : kLogicalClasses) sum += table.count(s, l, {nx, ny, nz});
          }
          EXPECT_EQ(static_cast<double>(sum), std::round(multinomial(n, nx, ny, nz))) << name;
        }
      }
    }
  }
}

TEST(Build, ParallelPartitionsGiveTheSameTable) {
  const StabilizerCode& code = get_code("C11");
  DecoderTable one = build_decoder_table(code);
  DecoderTable many = build_decoder_table(code, {.n_max = std::nullopt, .parallel_partitions = 5});
  EXPECT_TRUE(one == many);
}

TEST(Build, TooManyStabilizersIsACapacityError) {
  EXPECT_THROW(build_decoder_table(long_repetition_code(26)), CapacityError);
}

TEST(Build, ProfileIndexIsDenseAndUnique) {
  std::vector<int> hits(profile_count(6), 0);
  for (int nx = 0; nx <= 6; ++nx) {
    for (int ny = 0; nx + ny <= 6; ++ny) {
      for (int nz = 0; nx + ny + nz <= 6; ++nz) ++hits.at(profile_index(nx, ny, nz));
    }
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Probability, ConfigurationExample) {
  NoiseModel m = make_depolarizing(0.3);
  EXPECT_NEAR(error_config_probability({1, 0, 0}, 3, m), 0.7 * 0.7 * 0.1, 1e-15);
  EXPECT_EQ(error_config_probability({0, 0, 0}, 3, make_depolarizing(0)), 1.0);
}

TEST(Probability, PerfectDecodingAtZeroNoise) {
  for (const char* name : {"REP3", "S5", "S9", "C7"}) {
    DecoderTable table = build_decoder_table(get_code(name));
    SuccessProbability r = success_probability_perfect(table, make_depolarizing(0));
    EXPECT_EQ(r.P_d, 1.0);
    EXPECT_EQ(r.p_L, 0.0);
  }
}

TEST(Probability, RepetitionClosedForm) {
  DecoderTable table = build_decoder_table(get_code("REP3"));
  for (double p : {1e-4, 1e-3, 0.01, 0.05, 0.1, 0.2, 0.3, 0.45}) {
    SuccessProbability r = success_probability_perfect(table, make_independent(p, 0));
    EXPECT_NEAR(r.p_L, 3 * p * p - 2 * p * p * p, 1e-10) << p;
    EXPECT_NEAR(r.P_d, 1 - (3 * p * p - 2 * p * p * p), 1e-10) << p;
  }
}

TEST(Probability, MatchesBruteForceMaximumLikelihood) {
  Gen g(43);
  for (const char* name : {"S5", "S7", "C7", "S9b"}) {
    const StabilizerCode& code = get_code(name);
    DecoderTable table = build_decoder_table(code);
    for (int trial = 0; trial < 4; ++trial) {
      NoiseModel noise = g.noise(0.001, 0.4);
      EXPECT_NEAR(success_probability_perfect(table, noise).P_d, brute_success(code, noise), 1e-12) << name;
    }
  }
}

TEST(Probability, ExactMassesAreNormalized) {
  Gen g(44);
  for (const char* name : {"S6", "S9", "C11"}) {
    DecoderTable table = build_decoder_table(get_code(name));
    for (int trial = 0; trial < 5; ++trial) {
      double total = 0;
      for (const auto& m : class_masses(table, g.noise(0, 0.5))) total += m[0] + m[1] + m[2] + m[3];
      EXPECT_NEAR(total, 1.0, 1e-10) << name;
    }
  }
}

TEST(Probability, SevenQubitRatioTendsToTwoThirds) {
  DecoderTable table = build_decoder_table(get_code("S7"));
  double p = 1e-5;
  EXPECT_NEAR(success_probability_perfect(table, make_depolarizing(p)).p_L / p, 2.0 / 3.0, 1e-3);
}

TEST(Truncation, SuccessIsALowerBoundAndMonotone) {
  const StabilizerCode& code = get_code("S9");
  std::vector<DecoderTable> tables;
  for (int k = 0; k <= 9; ++k) tables.push_back(build_decoder_table(code, {.n_max = k}));
  for (double p : {0.01, 0.05, 0.15, 0.3}) {
    NoiseModel noise = make_depolarizing(p);
    double last = -1;
    for (int k = 0; k <= 9; ++k) {
      SuccessProbability r = success_probability_perfect(tables[k], noise);
      EXPECT_EQ(r.lower_bound, k < 9);
      EXPECT_GE(r.P_d, last - 1e-15);
      EXPECT_NEAR(r.P_d + r.p_L, 1.0, 1e-12);
      last = r.P_d;
    }
  }
}

TEST(Truncation, MissingMassMatchesTail) {
  NoiseModel noise = make_depolarizing(0.2);
  double tail = 0;
  for (int w = 4; w <= 9; ++w) {
    tail += std::tgamma(10.0) / (std::tgamma(w + 1.0) * std::tgamma(10.0 - w)) * std::pow(0.2, w) *
            std::pow(0.8, 9 - w);
  }
  EXPECT_NEAR(truncated_mass(9, 3, noise), tail, 1e-14);
  EXPECT_EQ(truncated_mass(9, 9, noise), 0.0);
}

TEST(Symmetry, SelfDualCodesAreInvariantUnderXZSwap) {
  for (const char* name : {"C7", "C11", "S13"}) {
    DecoderTable table = build_decoder_table(get_code(name));
    for (double alpha : {0.2, 3.0, 7.0}) {
      double px = 0.02;
      double a = success_probability_perfect(table, make_independent(px, alpha)).P_d;
      double b = success_probability_perfect(table, make_independent(px * alpha, 1 / alpha)).P_d;
      EXPECT_NEAR(a, b, 1e-12) << name;
    }
  }
}

TEST(Decode, WeightOneErrorsAreCorrected) {
  for (const char* name : {"S9", "S13", "C7", "C11", "GCC15"}) {
    const StabilizerCode& code = get_code(name);
    DecoderTable table = build_decoder_table(code, {.n_max = std::min(code.n_qubits(), 3)});
    NoiseModel noise = make_depolarizing(1e-3);
    LookupDecoder dec(table, noise);
    int copies = dec.copies();
    for (int q = 0; q < code.n_qubits(); ++q) {
      for (char kind : {'X', 'Y', 'Z'}) {
        PauliOperator e = PauliOperator::single(code.n_qubits(), q, kind);
        Syndrome s = compute_syndrome(code, e);
        std::vector<int> minus(code.n_stabilizers());
        for (int k = 0; k < code.n_stabilizers(); ++k) minus[k] = ((s >> k) & 1) * copies;
        PauliOperator fix = dec.correction(observation_from_counts(minus, copies));
        EXPECT_TRUE(is_logically_trivial(code, fix * e)) << name << " " << kind << q;
      }
    }
  }
}

TEST(Decode, DecodeLookupAgreesWithDecoder) {
  const StabilizerCode& code = get_code("S9");
  DecoderTable table = build_decoder_table(code);
  NoiseModel noise = make_depolarizing(0.05);
  LookupDecoder dec(table, noise);
  for (Observation obs = 0; obs < dec.n_observations(); ++obs) {
    EXPECT_EQ(decode_lookup(table, obs, noise), dec.correction(obs));
    EXPECT_EQ(compute_syndrome(code, dec.correction(obs)), obs);
  }
}

TEST(Noisy, ZeroMeasurementErrorEqualsPerfect) {
  for (const char* name : {"REP3", "S9", "C7"}) {
    DecoderTable table = build_decoder_table(get_code(name));
    for (NoisyScoring scoring : {NoisyScoring::kPosterior, NoisyScoring::kCommitted}) {
      NoiseModel noise = make_depolarizing(0.04);
      EXPECT_NEAR(success_probability_noisy(table, noise, scoring).P_d,
                  success_probability_perfect(table, noise).P_d, 1e-12);
    }
  }
  DecoderTable gcc = build_decoder_table(get_code("GCC15"), {.n_max = 4});
  NoiseModel noise = make_depolarizing(0.01);
  EXPECT_NEAR(success_probability_noisy(gcc, noise).P_d, success_probability_perfect(gcc, noise).P_d, 1e-12);
}

TEST(Noisy, PosteriorMatchesBruteForceOverReports) {
  const StabilizerCode& code = get_code("S7");
  DecoderTable table = build_decoder_table(code);
  NoiseModel noise = make_depolarizing(0.03, 0.02);
  auto masses = brute_masses(code, noise);
  int ns = code.n_stabilizers();
  double expected = 0;
  for (Syndrome seen = 0; seen < (1u << ns); ++seen) {
    std::array<double, 4> post{0, 0, 0, 0};
    for (Syndrome s = 0; s < (1u << ns); ++s) {
      int flips = std::popcount(seen ^ s);
      double w = std::pow(noise.q, flips) * std::pow(1 - noise.q, ns - flips);
      for (int l = 0; l < 4; ++l) post[l] += w * masses[s][l];
    }
    expected += std::max(std::max(post[0], post[1]), std::max(post[2], post[3]));
  }
  EXPECT_NEAR(success_probability_noisy(table, noise, NoisyScoring::kPosterior).P_d, expected, 1e-12);
}

TEST(Noisy, RepetitionWithoutPhysicalNoiseAlwaysSucceeds) {
  DecoderTable table = build_decoder_table(get_code("REP3"));
  SuccessProbability r = success_probability_noisy(table, make_depolarizing(0, 0.05), NoisyScoring::kPosterior);
  EXPECT_NEAR(r.P_d, 1.0, 1e-15);
}

TEST(Noisy, CommittedScoringFactorizes) {
  DecoderTable table = build_decoder_table(get_code("S9"));
  NoiseModel noise = make_depolarizing(0.02, 0.003);
  SuccessProbability perfect = success_probability_perfect(table, noise);
  SuccessProbability committed = success_probability_noisy(table, noise, NoisyScoring::kCommitted);
  EXPECT_NEAR(committed.P_d, std::pow(1 - 0.003, 8) * perfect.P_d, 1e-14);
  EXPECT_NEAR(committed.P_d + committed.p_L, 1.0, 1e-12);
}

TEST(Noisy, MajorityRate) {
  EXPECT_EQ(majority_error_rate(1, 0.1), 0.1);
  EXPECT_NEAR(majority_error_rate(3, 0.1), 3 * 0.01 * 0.9 + 0.001, 1e-15);
  EXPECT_EQ(measurement_copies(get_code("GCC15")), 3);
  EXPECT_EQ(measurement_copies(get_code("S9")), 1);
}

TEST(Metrics, EvaluateIsConsistent) {
  DecoderTable table = build_decoder_table(get_code("S9"));
  NoiseModel noise = make_depolarizing(0.05, 0.001);
  EvaluationResult r = evaluate(table, noise, {.scoring = NoisyScoring::kPosterior, .gate_overhead = 0.003});
  EXPECT_NEAR(r.P_d + r.p_L, 1.0, 1e-12);
  EXPECT_NEAR(r.C.value(), unencoded_failure_rate(0.05, 0.001) / r.p_L, 1e-12);
  ASSERT_TRUE(r.C_prime.has_value());
  EXPECT_GT(r.C_prime->value(), 1.0);
  EXPECT_LE(r.C_prime->value(), r.C.value());
}

TEST(Metrics, ZeroOverheadGivesPlainCorrectingPower) {
  DecoderTable table = build_decoder_table(get_code("C7"));
  Gen g(45);
  for (int trial = 0; trial < 20; ++trial) {
    NoiseModel noise = g.noise(0.001, 0.2).with_measurement_rate(g.uniform(0, 0.01));
    double c = correcting_power(success_probability(table, noise).p_L, noise).value();
    EXPECT_NEAR(modified_correcting_power(noise, table, 0).value(), c, 1e-12 * c);
    EXPECT_LE(modified_correcting_power(noise, table, 0.003).value(), c * (1 + 1e-12));
  }
}

}  // namespace
}  // namespace smallcodes
