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

#include "wqm/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "wqm/cascade.hpp"
#include "wqm/cli/svg.hpp"
#include "wqm/cli/sweep.hpp"
#include "wqm/eig.hpp"
#include "wqm/error.hpp"
#include "wqm/filters.hpp"
#include "wqm/hamiltonian.hpp"
#include "wqm/integrals.hpp"

namespace wqm::cli {

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << contents;
  if (!f) throw Error("failed writing " + path);
}

const char* policy_name(WaveletRange p) {
  return p == WaveletRange::FixedIndex ? "fixed" : "scaled";
}

std::string truncation_tag(const Options& o) {
  std::ostringstream s;
  s << "K=" << o.order << " k0=" << o.base_scale << " Ns=" << o.ns << " Nw=" << o.nw
    << " M=" << o.m << " wavelet_range=" << policy_name(o.policy);
  return s.str();
}

int run_filters(const Options& o, std::ostream& out) {
  const FilterBank bank = make_filter_bank(o.order);
  out << "# wqm filters K=" << o.order << '\n' << "index,h,g\n" << std::setprecision(17);
  for (std::size_t i = 0; i < bank.taps(); ++i) {
    out << i << ',' << bank.h(i) << ',' << bank.g(i) << '\n';
  }
  return kExitOk;
}

int run_cascade(const Options& o, std::ostream& out) {
  const FilterBank bank = make_filter_bank(o.order);
  const DyadicFunction f = o.wavelet ? refine_wavelet(bank, o.depth) : refine_scaling(bank, o.depth);
  out << "# wqm cascade K=" << o.order << " depth=" << o.depth
      << " function=" << (o.wavelet ? "wavelet" : "scaling") << '\n'
      << "x,value\n" << std::setprecision(17);
  for (std::size_t i = 0; i < f.values.size(); ++i) out << f.x(i) << ',' << f.values[i] << '\n';
  if (o.svg_path) {
    Series s{o.wavelet ? "w(x)" : "s(x)", {}, f.values};
    for (std::size_t i = 0; i < f.values.size(); ++i) s.x.push_back(f.x(i));
    const std::string title = std::string(o.wavelet ? "Daubechies wavelet" : "Daubechies scaling function") +
                              ", K = " + std::to_string(o.order);
    write_file(*o.svg_path, line_chart(std::span(&s, 1), {title, "x", s.label}));
  }
  return kExitOk;
}

int run_tables(const Options& o, std::ostream& out) {
  const IntegralTables t = IntegralTables::compute(make_filter_bank(o.order));
  out << "# wqm tables K=" << o.order << '\n' << std::setprecision(17);
  out << "# scaling moments M_m = int x^m s(x) dx\n" << "m,M_m\n";
  for (int m = 0; m <= t.moments.max_order(); ++m) out << m << ',' << t.moments[m] << '\n';
  out << "# two-point moments X_n^(m) = int x^m s(x) s(x-n) dx\n" << "n,X0,X1,X2\n";
  for (int n = -t.half_width(); n <= t.half_width(); ++n) {
    out << n << ',' << t.two_point.at(0, n) << ',' << t.two_point.at(1, n) << ','
        << t.two_point.at(2, n) << '\n';
  }
  out << "# connection coefficients Gamma_n = int s'(x) s'(x-n) dx\n" << "n,Gamma\n";
  for (int n = -t.half_width(); n <= t.half_width(); ++n) {
    out << n << ',' << t.connection.at(n) << '\n';
  }
  return kExitOk;
}

HamiltonianMatrix build(const Options& o) {
  const IntegralTables t = IntegralTables::compute(make_filter_bank(o.order));
  return assemble(build_basis(o.base_scale, o.ns, o.nw, o.m, o.policy), t);
}

int run_hamiltonian(const Options& o, std::ostream& out) {
  const HamiltonianMatrix h = build(o);
  const BasisSet& basis = h.basis();
  if (o.format == MatrixFormat::Json) {
    nlohmann::json j;
    j["model"] = {{"length_scale", OscillatorModel::kLengthScale},
                  {"energy_unit", OscillatorModel::kEnergyUnit}};
    j["truncation"] = {{"K", o.order}, {"k0", o.base_scale}, {"Ns", o.ns}, {"Nw", o.nw},
                       {"M", o.m}, {"wavelet_range", policy_name(o.policy)}};
    nlohmann::json elements = nlohmann::json::array();
    for (const BasisElement& e : basis) {
      elements.push_back({{"kind", e.kind == ElementKind::Scaling ? "s" : "w"},
                          {"scale", e.scale},
                          {"translation", e.translation}});
    }
    j["basis"] = elements;
    nlohmann::json blocks = nlohmann::json::object();
    for (Block b : {Block::ss, Block::sw, Block::ws, Block::ww}) {
      const BlockRange r = h.range(b);
      blocks[std::string(to_string(b))] = {{"row_begin", r.row_begin}, {"rows", r.rows},
                                           {"col_begin", r.col_begin}, {"cols", r.cols}};
    }
    j["blocks"] = blocks;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t a = 0; a < h.size(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t b = 0; b < h.size(); ++b) row.push_back(h(a, b));
      rows.push_back(row);
    }
    j["entries"] = rows;
    out << j.dump(1) << '\n';
  } else {
    out << "# wqm hamiltonian " << truncation_tag(o) << " size=" << h.size()
        << " scaling=" << basis.scaling_count() << '\n';
    out << "element";
    for (const BasisElement& e : basis) out << ',' << to_string(e);
    out << '\n' << std::setprecision(17);
    for (std::size_t a = 0; a < h.size(); ++a) {
      out << to_string(basis[a]);
      for (std::size_t b = 0; b < h.size(); ++b) out << ',' << h(a, b);
      out << '\n';
    }
  }
  if (o.svg_path) {
    // Separate the scaling block and each wavelet scale.
    std::vector<std::size_t> separators;
    for (std::size_t i = 1; i < basis.size(); ++i) {
      if (basis[i].kind != basis[i - 1].kind || basis[i].scale != basis[i - 1].scale) {
        separators.push_back(i);
      }
    }
    write_file(*o.svg_path, heat_map(h.entries(), separators, "Hamiltonian |H_ab|, " + truncation_tag(o)));
  }
  return kExitOk;
}

int run_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const HamiltonianMatrix h = build(o);
  const Spectrum s = solve_symmetric(h);
  std::size_t count = s.eigenvalues.size();
  if (o.states > 0) count = std::min(count, static_cast<std::size_t>(o.states));

  out << "# wqm solve " << truncation_tag(o) << " size=" << h.size()
      << " max_residual=" << std::setprecision(3) << s.max_residual()
      << " certified=" << (s.certified() ? "yes" : "no") << '\n';
  out << "n,E_n,exact,abs_error\n" << std::setprecision(17);
  for (std::size_t n = 0; n < count; ++n) {
    const double exact = static_cast<double>(n) + 0.5;
    out << n << ',' << s.eigenvalues[n] << ',' << exact << ','
        << std::abs(s.eigenvalues[n] - exact) << '\n';
  }
  if (!s.certified()) {
    err << "eigensolver residual certificate failed: max residual " << s.max_residual() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

int run_sweep_command(const Options& o, std::ostream& out, std::ostream& err) {
  const SweepResult r = run_sweep(o.sweep);
  const bool to_file = o.sweep.csv_path.has_value();
  if (!to_file) write_csv(out, r);
  if (o.sweep.mode == SweepMode::ScaleSweep) render_table(to_file ? out : err, r);
  if (!r.certified) {
    err << "eigensolver residual certificate failed for at least one sweep point\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace

int run(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    switch (o.command) {
      case Subcommand::Filters: return run_filters(o, out);
      case Subcommand::Cascade: return run_cascade(o, out);
      case Subcommand::Tables: return run_tables(o, out);
      case Subcommand::Hamiltonian: return run_hamiltonian(o, out);
      case Subcommand::Solve: return run_solve(o, out, err);
      case Subcommand::Sweep: return run_sweep_command(o, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace wqm::cli
