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

#include "smallcodes/scan.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

namespace smallcodes {

namespace {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

bool inside(double v) { return v >= 0; }

struct GridPoint {
  double p, q, f;
};

}  // namespace

Spacing parse_spacing(std::string_view text) {
  if (text == "linear" || text == "lin") return Spacing::kLinear;
  if (text == "log") return Spacing::kLog;
  throw std::invalid_argument("unknown spacing '" + std::string(text) + "'");
}

std::vector<double> GridAxis::values() const {
  if (steps < 1) throw std::invalid_argument("grid needs at least one step");
  if (steps == 1) return {min};
  if (spacing == Spacing::kLog && !(min > 0)) throw std::invalid_argument("log spacing needs a positive minimum");
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) {
    double t = static_cast<double>(i) / (steps - 1);
    out[i] = spacing == Spacing::kLinear ? min + t * (max - min) : min * std::pow(max / min, t);
  }
  out.back() = max;
  return out;
}

int default_n_max(const StabilizerCode& code) { return code.n_qubits() <= 13 ? code.n_qubits() : 6; }

void validate_sweep(const SweepSpec& spec) {
  auto check = [](const GridAxis& a, const char* name) {
    if (a.steps < 1) throw std::invalid_argument(std::string(name) + " grid is empty");
    if (!(a.min >= 0 && a.min < 1 && a.max >= 0 && a.max < 1)) {
      throw std::invalid_argument(std::string(name) + " range must lie within [0, 1)");
    }
    if (a.steps > 1 && !(a.max > a.min)) throw std::invalid_argument(std::string(name) + " range needs max > min");
    if (a.spacing == Spacing::kLog && !(a.min > 0)) {
      throw std::invalid_argument(std::string(name) + " log grid needs min > 0");
    }
  };
  check(spec.p, "p");
  check(spec.q, "q");
  if (spec.alpha < 0) throw std::invalid_argument("alpha must be >= 0");
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string csv_header() { return "code,noise,alpha,p,q,n_max,P_d,p_L,C,C_prime,lower_bound"; }

std::string csv_line(const SweepRow& row) {
  const auto& r = row.result;
  auto power = [](const CorrectingPower& c) { return c.is_bounded() ? format_double(c.value()) : std::string("inf"); };
  std::string out = row.code;
  out += ',' + std::string(to_string(row.noise));
  out += ',' + format_double(row.alpha);
  out += ',' + format_double(row.p);
  out += ',' + format_double(row.q);
  out += ',' + std::to_string(row.n_max);
  out += ',' + format_double(r.P_d);
  out += ',' + format_double(r.p_L);
  out += ',' + power(r.C);
  out += ',' + (r.C_prime ? power(*r.C_prime) : std::string());
  out += r.lower_bound ? ",1" : ",0";
  return out;
}

SweepRow evaluate_point(const DecoderTable& table, NoiseKind kind, double alpha, double p, double q,
                        const EvalOptions& options) {
  NoiseModel noise = make_noise(kind, p, alpha, q);
  SweepRow row;
  row.code = table.code().name();
  row.noise = kind;
  row.alpha = alpha;
  row.p = p;
  row.q = q;
  row.n_max = table.n_max();
  row.result = evaluate(table, noise, options);
  return row;
}

std::vector<SweepRow> sweep_physical_rate(const SweepSpec& spec, const DecoderTable& table) {
  validate_sweep(spec);
  if (!spec.code.empty() && spec.code != table.code().name()) {
    throw std::invalid_argument("sweep names code '" + spec.code + "' but the table is for '" + table.code().name() +
                                "'");
  }
  const auto ps = spec.p.values();
  const auto qs = spec.q.values();
  EvalOptions options{spec.scoring, spec.gate_overhead};
  std::vector<SweepRow> rows(ps.size() * qs.size());
  parallel_for(rows.size(), spec.threads, [&](std::size_t i) {
    rows[i] = evaluate_point(table, spec.noise, spec.alpha, ps[i % ps.size()], qs[i / ps.size()], options);
  });
  return rows;
}

double correcting_power_at(const DecoderTable& table, NoiseKind kind, double alpha, double p, double q,
                           NoisyScoring scoring) {
  return evaluate(table, make_noise(kind, p, alpha, q), {scoring, std::nullopt}).C.value_or_inf();
}

double find_crossover(const DecoderTable& table, const CrossoverQuery& query) {
  if (!(query.p_lo > 0 && query.p_hi > query.p_lo && query.p_hi < 1)) {
    throw std::invalid_argument("crossover bracket must satisfy 0 < p_lo < p_hi < 1");
  }
  auto f = [&](double p) {
    return correcting_power_at(table, query.kind, query.alpha, p, query.q, query.scoring) - query.target;
  };
  double lo = query.p_lo, hi = query.p_hi;
  double f_lo = f(lo), f_hi = f(hi);
  if (inside(f_lo) == inside(f_hi)) {
    throw NoCrossoverError("C - " + format_double(query.target) + " has no sign change on [" + format_double(lo) +
                           ", " + format_double(hi) + "] for code '" + table.code().name() + "'");
  }
  while (hi - lo > query.tolerance) {
    double mid = 0.5 * (lo + hi);
    if (inside(f(mid)) == inside(f_lo)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<Polyline> extract_contours(const std::vector<double>& p_grid, const std::vector<double>& q_grid,
                                       const std::vector<double>& values,
                                       const std::function<double(double, double)>& field, double tolerance) {
  const std::size_t np = p_grid.size(), nq = q_grid.size();
  if (values.size() != np * nq) throw SizeMismatchError("field values do not match the grid");
  if (np < 2 || nq < 2) return {};
  auto corner = [&](std::size_t i, std::size_t j) { return GridPoint{p_grid[i], q_grid[j], values[j * np + i]}; };
  auto h_edge = [&](std::size_t i, std::size_t j) { return 2 * (j * np + i); };
  auto v_edge = [&](std::size_t i, std::size_t j) { return 2 * (j * np + i) + 1; };

  std::map<std::size_t, ContourPoint> crossings;
  auto crossing = [&](std::size_t key) -> const ContourPoint& {
    auto it = crossings.find(key);
    if (it != crossings.end()) return it->second;
    std::size_t cell = key / 2;
    std::size_t i = cell % np, j = cell / np;
    GridPoint a = corner(i, j);
    GridPoint b = (key % 2 == 0) ? corner(i + 1, j) : corner(i, j + 1);
    auto point = [&](double t) { return std::pair{a.p + t * (b.p - a.p), a.q + t * (b.q - a.q)}; };
    double lo = 0, hi = 1;
    double t = (std::isfinite(a.f) && std::isfinite(b.f)) ? a.f / (a.f - b.f) : 0.5;
    ContourPoint best;
    for (int iter = 0; iter < 200; ++iter) {
      auto [p, q] = point(t);
      double v = field(p, q);
      best = {p, q, v};
      if (std::fabs(v) <= tolerance) break;
      if (inside(v) == inside(a.f)) {
        lo = t;
      } else {
        hi = t;
      }
      if (hi - lo < 1e-15) break;
      t = 0.5 * (lo + hi);
    }
    return crossings.emplace(key, best).first->second;
  };

  std::vector<std::array<std::size_t, 2>> segments;
  for (std::size_t j = 0; j + 1 < nq; ++j) {
    for (std::size_t i = 0; i + 1 < np; ++i) {
      const bool c0 = inside(corner(i, j).f), c1 = inside(corner(i + 1, j).f);
      const bool c2 = inside(corner(i + 1, j + 1).f), c3 = inside(corner(i, j + 1).f);
      const std::size_t e0 = h_edge(i, j), e1 = v_edge(i + 1, j), e2 = h_edge(i, j + 1), e3 = v_edge(i, j);
      std::vector<std::size_t> cut;
      if (c0 != c1) cut.push_back(e0);
      if (c1 != c2) cut.push_back(e1);
      if (c3 != c2) cut.push_back(e2);
      if (c0 != c3) cut.push_back(e3);
      if (cut.size() == 2) {
        segments.push_back({cut[0], cut[1]});
      } else if (cut.size() == 4) {
        double sum = corner(i, j).f + corner(i + 1, j).f + corner(i + 1, j + 1).f + corner(i, j + 1).f;
        bool centre = std::isnan(sum) ? true : inside(sum);
        if (centre == c0) {
          segments.push_back({e0, e1});
          segments.push_back({e2, e3});
        } else {
          segments.push_back({e0, e3});
          segments.push_back({e1, e2});
        }
      }
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> at_edge;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    at_edge[segments[s][0]].push_back(s);
    at_edge[segments[s][1]].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> lines;
  auto walk = [&](std::size_t start_edge) {
    Polyline line{crossing(start_edge)};
    std::size_t edge = start_edge;
    for (;;) {
      std::size_t next = segments.size();
      for (std::size_t s : at_edge[edge]) {
        if (!used[s]) {
          next = s;
          break;
        }
      }
      if (next == segments.size()) break;
      used[next] = true;
      edge = segments[next][0] == edge ? segments[next][1] : segments[next][0];
      line.push_back(crossing(edge));
    }
    lines.push_back(std::move(line));
  };
  for (const auto& [edge, segs] : at_edge) {
    if (segs.size() == 1 && !used[segs[0]]) walk(edge);
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) walk(segments[s][0]);
  }
  return lines;
}

double RegionResult::max_q() const {
  double best = 0;
  for (const auto& line : contours) {
    for (const auto& pt : line) best = std::max(best, pt.q);
  }
  return best;
}

RegionResult scan_region(const DecoderTable& table, const RegionQuery& query) {
  RegionResult out;
  out.p_grid = query.p_grid;
  out.q_grid = query.q_grid;
  out.target = query.target;
  const std::size_t np = query.p_grid.size(), nq = query.q_grid.size();
  if (np == 0 || nq == 0) throw std::invalid_argument("region grid is empty");
  out.grid.resize(np * nq);
  EvalOptions options{query.scoring, std::nullopt};
  parallel_for(out.grid.size(), query.threads, [&](std::size_t i) {
    out.grid[i] = evaluate_point(table, query.kind, query.alpha, query.p_grid[i % np], query.q_grid[i / np], options);
  });
  std::vector<double> values(out.grid.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = out.grid[i].result.C.value_or_inf() - query.target;
  auto field = [&](double p, double q) {
    return correcting_power_at(table, query.kind, query.alpha, p, q, query.scoring) - query.target;
  };
  out.contours = extract_contours(query.p_grid, query.q_grid, values, field, query.tolerance);
  return out;
}

CompareResult compare_codes(const DecoderTable& table_a, const DecoderTable& table_b, const RegionQuery& query) {
  CompareResult out;
  out.p_grid = query.p_grid;
  out.q_grid = query.q_grid;
  const std::size_t np = query.p_grid.size(), nq = query.q_grid.size();
  if (np == 0 || nq == 0) throw std::invalid_argument("comparison grid is empty");
  out.C_a.resize(np * nq);
  out.C_b.resize(np * nq);
  parallel_for(np * nq, query.threads, [&](std::size_t i) {
    double p = query.p_grid[i % np], q = query.q_grid[i / np];
    out.C_a[i] = correcting_power_at(table_a, query.kind, query.alpha, p, q, query.scoring);
    out.C_b[i] = correcting_power_at(table_b, query.kind, query.alpha, p, q, query.scoring);
  });
  auto diff = [](double a, double b) { return (std::isinf(a) && std::isinf(b)) ? 0.0 : a - b; };
  std::vector<double> values(np * nq);
  out.degenerate = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = diff(out.C_a[i], out.C_b[i]);
    if (std::fabs(values[i]) > query.tolerance) out.degenerate = false;
    if (values[i] > query.tolerance) out.a_better_somewhere = true;
    if (values[i] < -query.tolerance) out.b_better_somewhere = true;
  }
  if (out.degenerate) return out;
  auto field = [&](double p, double q) {
    return diff(correcting_power_at(table_a, query.kind, query.alpha, p, q, query.scoring),
                correcting_power_at(table_b, query.kind, query.alpha, p, q, query.scoring));
  };
  out.contours = extract_contours(query.p_grid, query.q_grid, values, field, query.tolerance);
  return out;
}

}  // namespace smallcodes
