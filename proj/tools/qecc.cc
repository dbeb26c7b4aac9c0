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

// qecc: command-line workbench for exact decoding of small codes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "smallcodes/catalog.h"
#include "smallcodes/code.h"
#include "smallcodes/decoder.h"
#include "smallcodes/metrics.h"
#include "smallcodes/montecarlo.h"
#include "smallcodes/scan.h"
#include "smallcodes/table_io.h"

namespace {

using namespace smallcodes;

struct TableOptions {
  std::string table_path;
  std::optional<int> n_max;
  bool exact = false;
};

struct NoiseOptions {
  std::string kind = "depolarizing";
  double alpha = 1;
  std::string scoring = "committed";
};

struct AxisOptions {
  double min = 0, max = 0;
  int steps = 1;
  std::string spacing = "linear";
  std::optional<double> fixed;

  GridAxis axis() const {
    if (fixed) return {*fixed, *fixed, 1, Spacing::kLinear};
    return {min, max, steps, parse_spacing(spacing)};
  }
};

struct Context {
  std::string catalog_path;
  std::string out_path;
  int threads = 1;
  Catalog catalog;
  std::ofstream file;

  const StabilizerCode& code(const std::string& name) const { return catalog.get(name); }
  std::ostream& out() { return file.is_open() ? static_cast<std::ostream&>(file) : std::cout; }
  void open_output() {
    if (out_path.empty()) return;
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
  }
};

void add_table_options(CLI::App* cmd, TableOptions& t) {
  cmd->add_option("--table", t.table_path, "Load a saved decoder table instead of building one");
  cmd->add_option("--n-max", t.n_max, "Truncation weight (default: exact up to 13 qubits, else 6)");
  cmd->add_flag("--exact", t.exact, "Build the exact table regardless of size");
}

void add_noise_options(CLI::App* cmd, NoiseOptions& n) {
  cmd->add_option("--noise", n.kind, "depolarizing | independent")->capture_default_str();
  cmd->add_option("--alpha", n.alpha, "p'_z / p'_x for independent noise")->capture_default_str();
  cmd->add_option("--scoring", n.scoring, "Noisy-measurement scoring: committed | posterior")->capture_default_str();
}

void add_axis_options(CLI::App* cmd, AxisOptions& a, const std::string& name) {
  cmd->add_option("--" + name + "-min", a.min)->capture_default_str();
  cmd->add_option("--" + name + "-max", a.max)->capture_default_str();
  cmd->add_option("--" + name + "-steps", a.steps)->capture_default_str();
  cmd->add_option("--" + name + "-spacing", a.spacing, "linear | log")->capture_default_str();
  cmd->add_option("--" + name, a.fixed, "Single value instead of a range");
}

DecoderTable get_table(const Context& ctx, const StabilizerCode& code, const TableOptions& t) {
  if (!t.table_path.empty()) return load_table(t.table_path, code);
  BuildConfig cfg;
  cfg.n_max = t.exact ? code.n_qubits() : t.n_max.value_or(default_n_max(code));
  cfg.parallel_partitions = ctx.threads;
  return build_decoder_table(code, cfg);
}

void write_contours(std::ostream& out, const std::vector<Polyline>& lines, const char* value_name) {
  out << "contour,index,p,q," << value_name << '\n';
  for (std::size_t c = 0; c < lines.size(); ++c) {
    for (std::size_t i = 0; i < lines[c].size(); ++i) {
      const auto& pt = lines[c][i];
      out << c << ',' << i << ',' << format_double(pt.p) << ',' << format_double(pt.q) << ','
          << format_double(pt.value) << '\n';
    }
  }
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const CodeNotFoundError*>(&e)) return "not-found";
  if (dynamic_cast<const CapacityError*>(&e)) return "capacity";
  if (dynamic_cast<const TableHashMismatchError*>(&e)) return "hash-mismatch";
  if (dynamic_cast<const TableVersionError*>(&e)) return "version-mismatch";
  if (dynamic_cast<const CorruptTableError*>(&e)) return "corrupt-table";
  if (dynamic_cast<const CatalogFormatError*>(&e)) return "catalog-format";
  if (dynamic_cast<const NoCrossoverError*>(&e)) return "no-crossover";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid-argument";
  return "runtime";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decoding performance of small stabilizer codes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML file");

  Context ctx;
  app.add_option("--catalog", ctx.catalog_path, "Extra catalog file; its codes are added to the built-in ones");
  app.add_option("--out", ctx.out_path, "Write CSV here instead of stdout");
  app.add_option("--threads", ctx.threads, "Worker threads")->capture_default_str();

  std::string code_name, code_b;
  TableOptions table;
  NoiseOptions noise;
  double p = 0.01, q = 0, gate_overhead = kDefaultGateOverhead, target = 1;
  bool with_c_prime = false;

  auto* list = app.add_subcommand("list-codes", "List catalog codes");

  auto* validate = app.add_subcommand("validate", "Check a code's structural invariants");
  validate->add_option("code", code_name)->required();

  auto* distance = app.add_subcommand("distance", "Brute-force code distances");
  distance->add_option("code", code_name)->required();

  std::string table_out;
  auto* build = app.add_subcommand("build-table", "Build and save a decoder table");
  build->add_option("code", code_name)->required();
  build->add_option("--n-max", table.n_max, "Truncation weight (default: exact up to 13 qubits, else 6)");
  build->add_flag("--exact", table.exact, "Build the exact table regardless of size");
  build->add_option("--table-out", table_out, "Table file to write")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate one noise point");
  eval->add_option("code", code_name)->required();
  eval->add_option("--p", p, "Physical error rate")->capture_default_str();
  eval->add_option("--q", q, "Measurement error rate")->capture_default_str();
  eval->add_flag("--c-prime", with_c_prime, "Also report C' with the gate overhead");
  eval->add_option("--gate-overhead", gate_overhead)->capture_default_str();
  add_noise_options(eval, noise);
  add_table_options(eval, table);

  AxisOptions p_axis{1e-4, 0.2, 25, "log", {}};
  AxisOptions q_axis{0, 0, 1, "linear", {}};
  auto* sweep = app.add_subcommand("sweep", "Sweep the physical error rate");
  sweep->add_option("code", code_name)->required();
  add_axis_options(sweep, p_axis, "p");
  add_axis_options(sweep, q_axis, "q");
  sweep->add_flag("--c-prime", with_c_prime, "Also report C' with the gate overhead");
  sweep->add_option("--gate-overhead", gate_overhead)->capture_default_str();
  add_noise_options(sweep, noise);
  add_table_options(sweep, table);

  CrossoverQuery cq;
  auto* crossover = app.add_subcommand("crossover", "Find p where C equals a target");
  crossover->add_option("code", code_name)->required();
  crossover->add_option("--q", cq.q)->capture_default_str();
  crossover->add_option("--target", cq.target)->capture_default_str();
  crossover->add_option("--p-lo", cq.p_lo)->capture_default_str();
  crossover->add_option("--p-hi", cq.p_hi)->capture_default_str();
  crossover->add_option("--tolerance", cq.tolerance)->capture_default_str();
  add_noise_options(crossover, noise);
  add_table_options(crossover, table);

  AxisOptions rp{1e-4, 0.2, 25, "log", {}};
  AxisOptions rq{0, 0.01, 21, "linear", {}};
  std::string contour_out;
  auto* region = app.add_subcommand("region", "Scan the (p, q) plane and trace the C = target contour");
  region->add_option("code", code_name)->required();
  add_axis_options(region, rp, "p");
  add_axis_options(region, rq, "q");
  region->add_option("--target", target)->capture_default_str();
  region->add_option("--contour-out", contour_out, "Write the contour polyline CSV here");
  add_noise_options(region, noise);
  add_table_options(region, table);

  auto* compare = app.add_subcommand("compare", "Trace where two codes have equal correcting power");
  compare->add_option("code_a", code_name)->required();
  compare->add_option("code_b", code_b)->required();
  add_axis_options(compare, rp, "p");
  add_axis_options(compare, rq, "q");
  add_noise_options(compare, noise);
  compare->add_option("--n-max", table.n_max, "Truncation weight for both codes");

  std::uint64_t trials = 1000000, seed = 1;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the logical error rate");
  mc->add_option("code", code_name)->required();
  mc->add_option("--p", p)->capture_default_str();
  mc->add_option("--q", q)->capture_default_str();
  mc->add_option("--trials", trials)->capture_default_str();
  mc->add_option("--seed", seed)->capture_default_str();
  add_noise_options(mc, noise);
  add_table_options(mc, table);

  CLI11_PARSE(app, argc, argv);

  try {
    ctx.catalog = builtin_catalog();
    if (!ctx.catalog_path.empty()) ctx.catalog.merge(Catalog::load(ctx.catalog_path));
    ctx.open_output();
    std::ostream& out = ctx.out();
    const NoiseKind kind = parse_noise_kind(noise.kind);
    const NoisyScoring scoring = parse_noisy_scoring(noise.scoring);

    if (*list) {
      out << "code,n_qubits,n_stabilizers,n_gauge_generators\n";
      for (const auto& name : ctx.catalog.names()) {
        const auto& c = ctx.code(name);
        out << name << ',' << c.n_qubits() << ',' << c.n_stabilizers() << ','
            << (c.gauge() ? c.gauge()->gauge_generators.size() : 0) << '\n';
      }
    } else if (*validate) {
      auto report = validate_code(ctx.code(code_name));
      out << "code,status,detail\n";
      if (report.ok()) out << code_name << ",ok,\n";
      for (const auto& f : report.failures) out << code_name << ",fail," << f << '\n';
      return report.ok() ? 0 : 1;
    } else if (*distance) {
      auto d = code_distance(ctx.code(code_name));
      out << "code,d_x,d_z,d,bit_flip,phase_flip\n";
      out << code_name << ',' << d.d_x << ',' << d.d_z << ',' << d.d << ',' << d.bit_flip << ',' << d.phase_flip
          << '\n';
    } else if (*build) {
      const auto& c = ctx.code(code_name);
      auto t = get_table(ctx, c, table);
      save_table(t, table_out);
      std::cerr << "wrote " << table_out << " (" << c.name() << ", n_max " << t.n_max() << ")\n";
    } else if (*eval) {
      auto t = get_table(ctx, ctx.code(code_name), table);
      EvalOptions opts{scoring, with_c_prime ? std::optional<double>(gate_overhead) : std::nullopt};
      out << csv_header() << '\n' << csv_line(evaluate_point(t, kind, noise.alpha, p, q, opts)) << '\n';
    } else if (*sweep) {
      auto t = get_table(ctx, ctx.code(code_name), table);
      SweepSpec spec;
      spec.code = code_name;
      spec.noise = kind;
      spec.alpha = noise.alpha;
      spec.p = p_axis.axis();
      spec.q = q_axis.axis();
      spec.n_max = t.n_max();
      if (with_c_prime) spec.gate_overhead = gate_overhead;
      spec.scoring = scoring;
      spec.threads = ctx.threads;
      out << csv_header() << '\n';
      for (const auto& row : sweep_physical_rate(spec, t)) out << csv_line(row) << '\n';
    } else if (*crossover) {
      auto t = get_table(ctx, ctx.code(code_name), table);
      cq.kind = kind;
      cq.alpha = noise.alpha;
      cq.scoring = scoring;
      double p_star = find_crossover(t, cq);
      out << "code,noise,alpha,q,target,n_max,p_star\n";
      out << code_name << ',' << to_string(kind) << ',' << format_double(noise.alpha) << ',' << format_double(cq.q)
          << ',' << format_double(cq.target) << ',' << t.n_max() << ',' << format_double(p_star) << '\n';
    } else if (*region) {
      auto t = get_table(ctx, ctx.code(code_name), table);
      RegionQuery rquery;
      rquery.kind = kind;
      rquery.alpha = noise.alpha;
      rquery.p_grid = rp.axis().values();
      rquery.q_grid = rq.axis().values();
      rquery.target = target;
      rquery.scoring = scoring;
      rquery.threads = ctx.threads;
      auto result = scan_region(t, rquery);
      out << csv_header() << '\n';
      for (const auto& row : result.grid) out << csv_line(row) << '\n';
      if (!contour_out.empty()) {
        std::ofstream cf(contour_out);
        if (!cf) throw std::runtime_error("cannot write '" + contour_out + "'");
        write_contours(cf, result.contours, "C");
      }
      std::cerr << "contours " << result.contours.size() << ", max q " << format_double(result.max_q()) << '\n';
    } else if (*compare) {
      const auto& a = ctx.code(code_name);
      const auto& b = ctx.code(code_b);
      TableOptions ta = table, tb = table;
      auto table_a = get_table(ctx, a, ta);
      auto table_b = get_table(ctx, b, tb);
      RegionQuery rquery;
      rquery.kind = kind;
      rquery.alpha = noise.alpha;
      rquery.p_grid = rp.axis().values();
      rquery.q_grid = rq.axis().values();
      rquery.scoring = scoring;
      rquery.threads = ctx.threads;
      auto result = compare_codes(table_a, table_b, rquery);
      write_contours(out, result.contours, "C_a_minus_C_b");
      std::cerr << "degenerate=" << result.degenerate << " a_better=" << result.a_better_somewhere
                << " b_better=" << result.b_better_somewhere << '\n';
    } else if (*mc) {
      const auto& c = ctx.code(code_name);
      auto t = get_table(ctx, c, table);
      NoiseModel nm = make_noise(kind, p, noise.alpha, q);
      auto est = estimate_logical_error_rate(c, t, nm, trials, seed, {scoring, ctx.threads});
      double exact = success_probability(t, nm, scoring).p_L;
      out << "code,noise,alpha,p,q,trials,failures,p_L_hat,std_err,seed,p_L_exact\n";
      out << code_name << ',' << to_string(kind) << ',' << format_double(noise.alpha) << ',' << format_double(nm.p)
          << ',' << format_double(q) << ',' << est.trials << ',' << est.failures << ',' << format_double(est.p_L_hat)
          << ',' << format_double(est.std_err) << ',' << est.seed << ',' << format_double(exact) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error," << error_kind(e) << ',' << e.what() << '\n';
    return 1;
  }
  return 0;
}
