// Copyright 2026 The wqm Authors
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

#include "wqm/cli/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>

#include "wqm/basis.hpp"
#include "wqm/cli/svg.hpp"
#include "wqm/eig.hpp"
#include "wqm/error.hpp"
#include "wqm/hamiltonian.hpp"
#include "wqm/integrals.hpp"

namespace wqm::cli {

namespace {

const IntegralTables& tables_k3() {
  static const IntegralTables tables = IntegralTables::compute(make_filter_bank(3));
  return tables;
}

struct Point {
  std::vector<double> energies;
  bool certified;
};

const char* mode_name(SweepMode m) {
  return m == SweepMode::TranslationSweep ? "translation" : "scale";
}

const char* policy_name(WaveletRange p) {
  return p == WaveletRange::FixedIndex ? "fixed" : "scaled";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << contents;
  if (!f) throw Error("failed writing " + path);
}

}  // namespace

std::vector<double> lowest_eigenvalues(int base_scale, int half_range, int extra_scales,
                                       int states, WaveletRange policy, bool* certified) {
  const BasisSet basis = build_basis(base_scale, half_range, half_range, extra_scales, policy);
  const Spectrum s = solve_symmetric(assemble(basis, tables_k3()));
  if (certified) *certified = s.certified();
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(states), s.eigenvalues.size());
  return {s.eigenvalues.begin(), s.eigenvalues.begin() + static_cast<std::ptrdiff_t>(count)};
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.order != 3) throw UnsupportedOrder("sweeps require K=3");
  tables_k3();  // build once before fanning out

  std::vector<std::future<Point>> jobs;
  for (int v = config.range_begin; v <= config.range_end; ++v) {
    const bool translation = config.mode == SweepMode::TranslationSweep;
    const int half = translation ? v : config.half_range;
    const int extra = translation ? config.extra_scales : v;
    jobs.push_back(std::async(std::launch::async, [=, &config] {
      Point p{};
      p.energies = lowest_eigenvalues(config.base_scale, half, extra, config.states, config.policy,
                                      &p.certified);
      return p;
    }));
  }

  SweepResult result;
  result.config = config;
  int v = config.range_begin;
  for (auto& job : jobs) {
    const Point p = job.get();
    result.certified = result.certified && p.certified;
    for (std::size_t n = 0; n < p.energies.size(); ++n) {
      const double exact = static_cast<double>(n) + 0.5;
      result.rows.push_back({v, static_cast<int>(n), p.energies[n], std::abs(p.energies[n] - exact)});
    }
    ++v;
  }

  if (config.csv_path) {
    std::ostringstream csv;
    write_csv(csv, result);
    write_file(*config.csv_path, csv.str());
  }
  if (config.svg_path) write_file(*config.svg_path, render_svg(result));
  return result;
}

SweepResult run_translation_sweep(const SweepConfig& config) {
  if (config.mode != SweepMode::TranslationSweep) {
    throw InvalidArgument("run_translation_sweep needs a translation-sweep config");
  }
  return run_sweep(config);
}

SweepResult run_scale_sweep(const SweepConfig& config) {
  if (config.mode != SweepMode::ScaleSweep) {
    throw InvalidArgument("run_scale_sweep needs a scale-sweep config");
  }
  return run_sweep(config);
}

void write_csv(std::ostream& out, const SweepResult& result) {
  const SweepConfig& c = result.config;
  const bool translation = c.mode == SweepMode::TranslationSweep;
  out << "# wqm sweep mode=" << mode_name(c.mode) << " K=" << c.order << " k0=" << c.base_scale;
  if (translation) {
    out << " M=" << c.extra_scales << " Ns=Nw=" << c.range_begin << ".." << c.range_end;
  } else {
    out << " Ns=Nw=" << c.half_range << " M=" << c.range_begin << ".." << c.range_end;
  }
  out << " wavelet_range=" << policy_name(c.policy) << " states=" << c.states << '\n';
  out << (translation ? "Ns,n,E_n,ln_abs_error\n" : "M,n,E_n,abs_error\n");
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const SweepRow& r : result.rows) {
    out << r.parameter << ',' << r.state << ',' << r.energy << ','
        << (translation ? std::log(r.error) : r.error) << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void render_table(std::ostream& out, const SweepResult& result) {
  std::map<int, std::map<int, double>> by_state;  // n -> (M -> E)
  for (const SweepRow& r : result.rows) by_state[r.state][r.parameter] = r.energy;
  const SweepConfig& c = result.config;
  const char* name = c.mode == SweepMode::ScaleSweep ? "M" : "Ns";

  char buf[64];
  out << std::setw(3) << "n" << std::setw(12) << "Expected";
  for (int v = c.range_begin; v <= c.range_end; ++v) {
    std::snprintf(buf, sizeof buf, "%s = %d", name, v);
    out << std::setw(12) << buf;
  }
  out << '\n';
  for (const auto& [n, row] : by_state) {
    out << std::setw(3) << n;
    std::snprintf(buf, sizeof buf, "%.6g", n + 0.5);
    out << std::setw(12) << buf;
    for (int v = c.range_begin; v <= c.range_end; ++v) {
      const auto it = row.find(v);
      if (it == row.end()) {
        out << std::setw(12) << "-";
        continue;
      }
      std::snprintf(buf, sizeof buf, "%.6g", it->second);
      out << std::setw(12) << buf;
    }
    out << '\n';
  }
}

std::string render_svg(const SweepResult& result) {
  const bool translation = result.config.mode == SweepMode::TranslationSweep;
  std::map<int, Series> by_state;
  for (const SweepRow& r : result.rows) {
    Series& s = by_state[r.state];
    s.label = "n = " + std::to_string(r.state);
    s.x.push_back(r.parameter);
    s.y.push_back(std::log(r.error));
  }
  std::vector<Series> series;
  for (auto& [n, s] : by_state) series.push_back(std::move(s));
  ChartLabels labels;
  labels.title = translation ? "ln|E_n - (n + 1/2)| vs Ns = Nw (M = " +
                                   std::to_string(result.config.extra_scales) + ")"
                             : "ln|E_n - (n + 1/2)| vs M (Ns = Nw = " +
                                   std::to_string(result.config.half_range) + ")";
  labels.x_label = translation ? "Ns = Nw" : "M";
  labels.y_label = "ln |E_n - (n + 1/2)|";
  return line_chart(series, labels);
}

}  // namespace wqm::cli
