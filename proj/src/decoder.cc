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

#include "smallcodes/decoder.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "numeric.h"

namespace smallcodes {

namespace {

constexpr int kMaxStabilizers = 24;
constexpr std::size_t kMaxTableCells = std::size_t{1} << 28;
constexpr double kMaxEnumerated = 1.8e10;
constexpr std::size_t kMaxObservations = std::size_t{1} << 24;

// Syndrome bits plus the two class bits (above bit n_stabilizers) of single-qubit Paulis.
struct ColumnTables {
  int n_stabilizers = 0;
  int low_bits = 0;
  std::vector<std::uint32_t> x_low, x_high, z_low, z_high;

  std::uint32_t x(QubitMask m) const { return x_low[m & low_mask(low_bits)] ^ x_high[m >> low_bits]; }
  std::uint32_t z(QubitMask m) const { return z_low[m & low_mask(low_bits)] ^ z_high[m >> low_bits]; }
};

std::vector<std::uint32_t> span_table(const std::vector<std::uint32_t>& cols, int first, int count) {
  std::vector<std::uint32_t> t(std::size_t{1} << count, 0);
  for (std::size_t m = 1; m < t.size(); ++m) {
    t[m] = t[m & (m - 1)] ^ cols[first + std::countr_zero(m)];
  }
  return t;
}

ColumnTables column_tables(const StabilizerCode& code) {
  const int n = code.n_qubits();
  const int ns = code.n_stabilizers();
  std::vector<std::uint32_t> cx(n, 0), cz(n, 0);
  for (int k = 0; k < ns; ++k) {
    const auto& s = code.stabilizers()[k];
    for (int q = 0; q < n; ++q) {
      if ((s.z_mask() >> q) & 1) cx[q] |= 1u << k;
      if ((s.x_mask() >> q) & 1) cz[q] |= 1u << k;
    }
  }
  const auto& lx = code.logical_x();
  const auto& lz = code.logical_z();
  for (int q = 0; q < n; ++q) {
    cx[q] |= (((lz.z_mask() >> q) & 1u) | (((lx.z_mask() >> q) & 1u) << 1)) << ns;
    cz[q] |= (((lz.x_mask() >> q) & 1u) | (((lx.x_mask() >> q) & 1u) << 1)) << ns;
  }
  ColumnTables t;
  t.n_stabilizers = ns;
  t.low_bits = std::min(n, 16);
  t.x_low = span_table(cx, 0, t.low_bits);
  t.z_low = span_table(cz, 0, t.low_bits);
  t.x_high = span_table(cx, t.low_bits, n - t.low_bits);
  t.z_high = span_table(cz, t.low_bits, n - t.low_bits);
  return t;
}

double log_multinomial(int n, int a, int b, int c) {
  return std::lgamma(n + 1.0) - std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(c + 1.0) -
         std::lgamma(n - a - b - c + 1.0);
}

std::vector<QubitMask> supports_up_to(int n, int max_weight) {
  std::vector<QubitMask> out;
  for (int w = 0; w <= max_weight; ++w) {
    if (w == 0) {
      out.push_back(0);
      continue;
    }
    std::uint64_t v = (std::uint64_t{1} << w) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
      out.push_back(static_cast<QubitMask>(v));
      std::uint64_t c = v & -v;
      std::uint64_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }
  return out;
}

std::vector<WeightProfile> profiles_in_order(int n_max) {
  std::vector<WeightProfile> out;
  out.reserve(profile_count(n_max));
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int nz = 0; nz <= m; ++nz) out.push_back({n - m, m - nz, nz});
    }
  }
  return out;
}

int argmax_class(const std::array<double, 4>& v) {
  int best = 0;
  for (int l = 1; l < 4; ++l) {
    if (v[l] > v[best]) best = l;
  }
  return best;
}

double binomial(int n, int k) { return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0))); }

// report[m][b]: probability that m of `copies` reports read -1 when the true bit is b.
std::vector<std::array<double, 2>> report_weights(int copies, double q) {
  std::vector<std::array<double, 2>> w(copies + 1);
  for (int m = 0; m <= copies; ++m) {
    double c = binomial(copies, m);
    w[m][0] = c * std::pow(q, m) * std::pow(1 - q, copies - m);
    w[m][1] = c * std::pow(q, copies - m) * std::pow(1 - q, m);
  }
  return w;
}

std::size_t observation_count(int copies, int n_stabilizers) {
  double count = std::pow(copies + 1.0, n_stabilizers);
  if (count > static_cast<double>(kMaxObservations)) {
    throw CapacityError("observation space of " + std::to_string(count) + " outcomes exceeds the supported size");
  }
  return static_cast<std::size_t>(count);
}

Syndrome majority_syndrome(Observation obs, int copies, int n_stabilizers) {
  Syndrome s = 0;
  for (int k = 0; k < n_stabilizers; ++k) {
    int m = static_cast<int>(obs % (copies + 1));
    obs /= copies + 1;
    if (2 * m > copies) s |= 1u << k;
  }
  return s;
}

// Class mass of every observation: A[obs][l] = sum_s P(obs | s) M[s][l].
std::vector<std::array<double, 4>> observation_masses(const std::vector<std::array<double, 4>>& masses, int copies,
                                                      int n_stabilizers, double q) {
  const std::size_t base = copies + 1;
  std::vector<std::array<double, 4>> a(observation_count(copies, n_stabilizers), std::array<double, 4>{});
  for (std::size_t s = 0; s < masses.size(); ++s) {
    std::size_t obs = 0, stride = 1;
    for (int k = 0; k < n_stabilizers; ++k, stride *= base) {
      if ((s >> k) & 1) obs += stride;
    }
    a[obs] = masses[s];
  }
  auto w = report_weights(copies, q);
  std::size_t stride = 1;
  for (int k = 0; k < n_stabilizers; ++k, stride *= base) {
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      if ((idx / stride) % base != 0) continue;
      auto v0 = a[idx];
      auto v1 = a[idx + stride];
      for (std::size_t m = 0; m < base; ++m) {
        for (int l = 0; l < 4; ++l) a[idx + m * stride][l] = w[m][0] * v0[l] + w[m][1] * v1[l];
      }
    }
  }
  return a;
}

}  // namespace

char to_char(LogicalClass l) { return "IXZY"[static_cast<int>(l)]; }

LogicalClass parse_logical_class(char c) {
  switch (c) {
    case 'I': return LogicalClass::I;
    case 'X': return LogicalClass::X;
    case 'Z': return LogicalClass::Z;
    case 'Y': return LogicalClass::Y;
  }
  throw std::invalid_argument(std::string("unknown logical class '") + c + "'");
}

Syndrome compute_syndrome(const StabilizerCode& code, const PauliOperator& e) {
  if (e.n_qubits() != code.n_qubits()) {
    throw SizeMismatchError("error acts on " + std::to_string(e.n_qubits()) + " qubits, code has " +
                            std::to_string(code.n_qubits()));
  }
  Syndrome s = 0;
  for (int k = 0; k < code.n_stabilizers(); ++k) {
    if (symplectic_product(code.stabilizers()[k], e)) s |= 1u << k;
  }
  return s;
}

LogicalClass classify_logical(const StabilizerCode& code, const PauliOperator& e, const PauliOperator& reference) {
  if (compute_syndrome(code, e) != compute_syndrome(code, reference)) {
    throw SyndromeMismatchError("error and reference correction have different syndromes");
  }
  PauliOperator t = reference * e;
  int v = symplectic_product(t, code.logical_z()) | (symplectic_product(t, code.logical_x()) << 1);
  return static_cast<LogicalClass>(v);
}

PauliOperator logical_operator(const StabilizerCode& code, LogicalClass l) {
  switch (l) {
    case LogicalClass::I: return PauliOperator::identity(code.n_qubits());
    case LogicalClass::X: return code.logical_x();
    case LogicalClass::Z: return code.logical_z();
    case LogicalClass::Y: return code.logical_x() * code.logical_z();
  }
  return PauliOperator::identity(code.n_qubits());
}

std::uint64_t CoefficientTensor::count(const WeightProfile& w) const {
  auto it = counts.find({w.n_x, w.n_y, w.n_z});
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t CoefficientTensor::shell_sum(int weight) const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : counts) {
    if (std::get<0>(key) + std::get<1>(key) + std::get<2>(key) == weight) sum += c;
  }
  return sum;
}

std::uint64_t CoefficientTensor::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : counts) sum += c;
  return sum;
}

std::size_t profile_index(int n_x, int n_y, int n_z) {
  std::size_t n = n_x + n_y + n_z;
  std::size_t m = n_y + n_z;
  return n * (n + 1) * (n + 2) / 6 + m * (m + 1) / 2 + n_z;
}

std::size_t profile_count(int n_max) {
  std::size_t n = n_max + 1;
  return n * (n + 1) * (n + 2) / 6;
}

DecoderTable::DecoderTable(StabilizerCode code, int n_max, std::vector<std::uint32_t> counts,
                           std::vector<PauliOperator> reference_corrections)
    : code_(std::move(code)),
      code_hash_(code_.content_hash()),
      n_max_(n_max),
      n_profiles_(profile_count(n_max)),
      counts_(std::move(counts)),
      cstar_(std::move(reference_corrections)) {
  if (n_max_ < 0 || n_max_ > code_.n_qubits()) throw std::invalid_argument("n_max outside [0, N_Q]");
  if (counts_.size() != n_syndromes() * 4 * n_profiles_) throw SizeMismatchError("count array has the wrong size");
  if (cstar_.size() != n_syndromes()) throw SizeMismatchError("need one reference correction per syndrome");
}

std::uint64_t DecoderTable::count(Syndrome s, LogicalClass l, const WeightProfile& w) const {
  if (w.total() > n_max_) return 0;
  return counts(s, l)[profile_index(w.n_x, w.n_y, w.n_z)];
}

CoefficientTensor DecoderTable::tensor(Syndrome s, LogicalClass l) const {
  CoefficientTensor t;
  const auto profiles = profiles_in_order(n_max_);
  const std::uint32_t* c = counts(s, l);
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (c[i]) t.counts[{profiles[i].n_x, profiles[i].n_y, profiles[i].n_z}] = c[i];
  }
  return t;
}

std::uint64_t DecoderTable::total_count() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

bool operator==(const DecoderTable& a, const DecoderTable& b) {
  return a.code_hash_ == b.code_hash_ && a.n_max_ == b.n_max_ && a.code_ == b.code_ && a.counts_ == b.counts_ &&
         a.cstar_ == b.cstar_;
}

DecoderTable build_decoder_table(const StabilizerCode& code, const BuildConfig& cfg) {
  const int n = code.n_qubits();
  const int ns = code.n_stabilizers();
  const int n_max = cfg.n_max.value_or(n);
  if (n_max < 0 || n_max > n) throw std::invalid_argument("n_max must lie in [0, " + std::to_string(n) + "]");
  if (ns > kMaxStabilizers) throw CapacityError("too many stabilizer generators for a lookup table");
  const std::size_t n_syndromes = std::size_t{1} << ns;
  const std::size_t n_profiles = profile_count(n_max);
  if (n_syndromes * 4 * n_profiles > kMaxTableCells) {
    throw CapacityError("decoder table for '" + code.name() + "' needs " + std::to_string(n_syndromes * 4 * n_profiles) +
                        " cells");
  }
  double enumerated = 0;
  for (int w = 0; w <= n_max; ++w) enumerated += std::exp(std::lgamma(n + 1.0) - std::lgamma(w + 1.0) - std::lgamma(n - w + 1.0)) * std::pow(3.0, w);
  if (enumerated > kMaxEnumerated) {
    throw CapacityError("enumerating " + std::to_string(enumerated) + " errors exceeds the build limit");
  }
  for (const auto& w : profiles_in_order(n_max)) {
    if (log_multinomial(n, w.n_x, w.n_y, w.n_z) > std::log(4.0e9)) {
      throw CapacityError("coefficient counts would overflow 32 bits");
    }
  }

  const ColumnTables cols = column_tables(code);
  const std::uint32_t syndrome_mask = static_cast<std::uint32_t>(n_syndromes - 1);

  // Reference corrections: first error of each syndrome in enumeration order.
  std::vector<PauliOperator> cstar(n_syndromes, PauliOperator::identity(n));
  std::vector<std::uint8_t> cstar_sig(n_syndromes, 0);
  {
    std::vector<bool> seen(n_syndromes, false);
    std::size_t found = 0;
    ErrorEnumerator it(n, n);
    QubitMask x, z;
    while (found < n_syndromes && it.next(x, z)) {
      std::uint32_t v = cols.x(x) ^ cols.z(z);
      std::uint32_t s = v & syndrome_mask;
      if (seen[s]) continue;
      seen[s] = true;
      cstar[s] = PauliOperator(n, x, z);
      cstar_sig[s] = static_cast<std::uint8_t>(v >> ns);
      ++found;
    }
  }

  const std::vector<QubitMask> supports = supports_up_to(n, n_max);
  std::vector<std::size_t> shell_base(n_max + 2);
  for (int w = 0; w <= n_max + 1; ++w) shell_base[w] = profile_count(w - 1);

  // Partial tables indexed [(raw class << ns) | s][profile].
  auto accumulate = [&](int part, int parts, std::vector<std::uint32_t>& acc) {
    acc.assign(n_syndromes * 4 * n_profiles, 0);
    for (std::size_t i = part; i < supports.size(); i += parts) {
      const QubitMask u = supports[i];
      const int wu = std::popcount(u);
      const std::size_t base = shell_base[wu];
      QubitMask x = 0;
      do {
        const QubitMask rest = u & ~x;
        const std::uint32_t head = cols.x(x) ^ cols.z(rest);
        const int nxy = std::popcount(x);
        const int nrest = wu - nxy;
        QubitMask y = 0;
        do {
          const std::uint32_t v = head ^ cols.z(y);
          const int ny = std::popcount(y);
          const int nx = nxy - ny;
          const std::size_t m = wu - nx;
          const std::size_t idx = base + m * (m + 1) / 2 + nrest;
          ++acc[static_cast<std::size_t>(v) * n_profiles + idx];
          y = (y - x) & x;
        } while (y != 0);
        x = (x - u) & u;
      } while (x != 0);
    }
  };

  const int parts = std::max(1, cfg.parallel_partitions);
  std::vector<std::vector<std::uint32_t>> partial(parts);
  if (parts == 1) {
    accumulate(0, 1, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (int p = 0; p < parts; ++p) workers.emplace_back([&, p] { accumulate(p, parts, partial[p]); });
    for (auto& t : workers) t.join();
    for (int p = 1; p < parts; ++p) {
      for (std::size_t i = 0; i < partial[0].size(); ++i) partial[0][i] += partial[p][i];
      std::vector<std::uint32_t>().swap(partial[p]);
    }
  }
  const auto& acc = partial[0];

  std::vector<std::uint32_t> counts(n_syndromes * 4 * n_profiles);
  for (std::size_t s = 0; s < n_syndromes; ++s) {
    for (std::size_t l = 0; l < 4; ++l) {
      std::size_t raw = l ^ cstar_sig[s];
      std::copy_n(acc.begin() + ((raw << ns) | s) * n_profiles, n_profiles,
                  counts.begin() + (s * 4 + l) * n_profiles);
    }
  }
  return DecoderTable(code, n_max, std::move(counts), std::move(cstar));
}

double error_config_probability(const WeightProfile& profile, int n_qubits, const NoiseModel& noise) {
  const auto& r = noise.rates;
  if (r.x < 0 || r.y < 0 || r.z < 0 || r.any() > 1 + 1e-15) throw InvalidNoiseError("invalid per-Pauli rates");
  if (profile.n_x < 0 || profile.n_y < 0 || profile.n_z < 0 || profile.total() > n_qubits) {
    throw std::invalid_argument("weight profile exceeds the qubit count");
  }
  double none = std::max(0.0, r.none());
  return std::pow(none, n_qubits - profile.total()) * std::pow(r.x, profile.n_x) * std::pow(r.y, profile.n_y) *
         std::pow(r.z, profile.n_z);
}

double truncated_mass(int n_qubits, int n_max, const NoiseModel& noise) {
  double any = noise.rates.any();
  double none = std::max(0.0, noise.rates.none());
  NeumaierSum sum;
  for (int w = n_max + 1; w <= n_qubits; ++w) {
    sum.add(binomial(n_qubits, w) * std::pow(any, w) * std::pow(none, n_qubits - w));
  }
  return sum.value();
}

std::vector<std::array<double, 4>> class_masses(const DecoderTable& table, const NoiseModel& noise) {
  const int n = table.code().n_qubits();
  const auto profiles = profiles_in_order(table.n_max());
  std::vector<double> weight(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) weight[i] = error_config_probability(profiles[i], n, noise);
  std::vector<std::array<double, 4>> masses(table.n_syndromes());
  for (Syndrome s = 0; s < table.n_syndromes(); ++s) {
    for (auto l : kLogicalClasses) {
      const std::uint32_t* c = table.counts(s, l);
      NeumaierSum sum;
      for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (c[i]) sum.add(c[i] * weight[i]);
      }
      masses[s][static_cast<int>(l)] = sum.value();
    }
  }
  return masses;
}

std::string_view to_string(NoisyScoring s) { return s == NoisyScoring::kPosterior ? "posterior" : "committed"; }

NoisyScoring parse_noisy_scoring(std::string_view text) {
  if (text == "posterior") return NoisyScoring::kPosterior;
  if (text == "committed") return NoisyScoring::kCommitted;
  throw std::invalid_argument("unknown scoring '" + std::string(text) + "'");
}

SuccessProbability success_probability_perfect(const DecoderTable& table, const NoiseModel& noise) {
  const auto masses = class_masses(table, noise);
  NeumaierSum success, failure;
  for (const auto& m : masses) {
    int best = argmax_class(m);
    success.add(m[best]);
    for (int l = 0; l < 4; ++l) {
      if (l != best) failure.add(m[l]);
    }
  }
  failure.add(truncated_mass(table.code().n_qubits(), table.n_max(), noise));
  return {success.value(), failure.value(), !table.exact()};
}

int measurement_copies(const StabilizerCode& code) {
  if (code.gauge()) {
    int r = code.gauge()->copies_per_stabilizer();
    if (r > 0) return r;
  }
  return 1;
}

double majority_error_rate(int copies, double q) {
  if (copies % 2 == 0) throw std::invalid_argument("majority vote needs an odd number of copies");
  double sum = 0;
  for (int m = copies / 2 + 1; m <= copies; ++m) {
    sum += binomial(copies, m) * std::pow(q, m) * std::pow(1 - q, copies - m);
  }
  return sum;
}

SuccessProbability success_probability_noisy(const DecoderTable& table, const NoiseModel& noise,
                                             NoisyScoring scoring) {
  if (!(noise.q >= 0 && noise.q < 1)) throw InvalidNoiseError("measurement error rate outside [0, 1)");
  if (noise.q == 0) return success_probability_perfect(table, noise);
  const int ns = table.n_stabilizers();
  const int copies = measurement_copies(table.code());

  if (scoring == NoisyScoring::kCommitted) {
    SuccessProbability perfect = success_probability_perfect(table, noise);
    double q_eff = majority_error_rate(copies, noise.q);
    double log_right = ns * std::log1p(-q_eff);
    double all_right = std::exp(log_right);
    return {all_right * perfect.P_d, -std::expm1(log_right) + all_right * perfect.p_L, perfect.lower_bound};
  }

  const auto obs = observation_masses(class_masses(table, noise), copies, ns, noise.q);
  NeumaierSum success, failure;
  for (const auto& m : obs) {
    int best = argmax_class(m);
    success.add(m[best]);
    for (int l = 0; l < 4; ++l) {
      if (l != best) failure.add(m[l]);
    }
  }
  failure.add(truncated_mass(table.code().n_qubits(), table.n_max(), noise));
  return {success.value(), failure.value(), !table.exact()};
}

Observation observation_from_counts(const std::vector<int>& minus_counts, int copies) {
  Observation obs = 0;
  for (std::size_t k = minus_counts.size(); k-- > 0;) {
    if (minus_counts[k] < 0 || minus_counts[k] > copies) throw std::out_of_range("copy count out of range");
    obs = obs * (copies + 1) + minus_counts[k];
  }
  return obs;
}

LookupDecoder::LookupDecoder(const DecoderTable& table, const NoiseModel& noise, NoisyScoring scoring)
    : table_(&table),
      scoring_(scoring),
      copies_(measurement_copies(table.code())),
      masses_(class_masses(table, noise)),
      report_(report_weights(copies_, noise.q)) {
  const int ns = table.n_stabilizers();
  if (scoring_ == NoisyScoring::kCommitted && copies_ % 2 == 0) {
    throw std::invalid_argument("committed scoring needs an odd number of copies");
  }
  if (scoring_ == NoisyScoring::kPosterior) {
    const auto obs = observation_masses(masses_, copies_, ns, noise.q);
    logical_.resize(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) logical_[i] = static_cast<std::uint8_t>(argmax_class(obs[i]));
  } else {
    logical_.resize(observation_count(copies_, ns));
    for (std::size_t i = 0; i < logical_.size(); ++i) {
      logical_[i] = static_cast<std::uint8_t>(argmax_class(masses_[majority_syndrome(i, copies_, ns)]));
    }
  }
}

double LookupDecoder::likelihood(Observation obs, Syndrome s) const {
  double w = 1;
  for (int k = 0; k < table_->n_stabilizers(); ++k) {
    w *= report_[obs % (copies_ + 1)][(s >> k) & 1];
    obs /= copies_ + 1;
  }
  return w;
}

Syndrome LookupDecoder::syndrome(Observation obs) const {
  const int ns = table_->n_stabilizers();
  if (obs >= logical_.size()) throw std::out_of_range("observation index out of range");
  if (scoring_ == NoisyScoring::kCommitted) return majority_syndrome(obs, copies_, ns);
  const int l = logical_[obs];
  Syndrome best = majority_syndrome(obs, copies_, ns);
  double best_mass = -1;
  for (Syndrome s = 0; s < table_->n_syndromes(); ++s) {
    double m = likelihood(obs, s) * masses_[s][l];
    if (m > best_mass) {
      best_mass = m;
      best = s;
    }
  }
  return best_mass > 0 ? best : majority_syndrome(obs, copies_, ns);
}

PauliOperator LookupDecoder::correction(Observation obs) const {
  Decision d = decide(obs);
  return table_->reference_correction(d.syndrome) * logical_operator(table_->code(), d.logical);
}

PauliOperator decode_lookup(const DecoderTable& table, Observation observed, const NoiseModel& noise,
                            NoisyScoring scoring) {
  return LookupDecoder(table, noise, scoring).correction(observed);
}

}  // namespace smallcodes
