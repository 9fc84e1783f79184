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

#include "wqm/cli/args.hpp"

#include <map>
#include <sstream>

#include "CLI11.hpp"

namespace wqm::cli {

SweepConfig SweepConfig::translation_defaults() {
  SweepConfig c;
  c.mode = SweepMode::TranslationSweep;
  c.extra_scales = 1;
  c.range_begin = 1;
  c.range_end = 8;
  return c;
}

SweepConfig SweepConfig::scale_defaults() {
  SweepConfig c;
  c.mode = SweepMode::ScaleSweep;
  c.half_range = 5;
  c.range_begin = 0;
  c.range_end = 2;
  return c;
}

namespace {

const std::map<std::string, WaveletRange> kPolicies{
    {"fixed", WaveletRange::FixedIndex},
    {"scaled", WaveletRange::ScaledWithResolution},
};

const std::map<std::string, SweepMode> kModes{
    {"M", SweepMode::ScaleSweep},
    {"scale", SweepMode::ScaleSweep},
    {"N", SweepMode::TranslationSweep},
    {"Ns", SweepMode::TranslationSweep},
    {"translation", SweepMode::TranslationSweep},
};

const std::map<std::string, MatrixFormat> kFormats{
    {"csv", MatrixFormat::Csv},
    {"json", MatrixFormat::Json},
};

CLI::Option* add_order(CLI::App* app, int& order) {
  return app->add_option("--K", order, "Daubechies order K (filter has 2K taps)")
      ->check(CLI::IsMember({1, 2, 3}));
}

void add_truncation(CLI::App* app, Options& o) {
  add_order(app, o.order)->capture_default_str();
  app->add_option("--k0", o.base_scale, "coarsest scale")->capture_default_str();
  app->add_option("--Ns", o.ns, "scaling translation half-range")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--Nw", o.nw, "wavelet translation half-range")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--M", o.m, "extra wavelet scales above k0")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  app->add_option("--wavelet-range", o.policy, "wavelet translation window: fixed|scaled")
      ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));
}

std::string usage_error(const CLI::App& app, const std::string& what) {
  std::ostringstream out;
  out << "error: " << what << "\n\n" << app.help();
  return out.str();
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Daubechies-wavelet solver for the 1D quantum harmonic oscillator", "wqm"};
  app.require_subcommand(1);

  auto* filters = app.add_subcommand("filters", "print filter coefficients h and g as CSV");
  add_order(filters, o.order)->required();

  auto* cascade = app.add_subcommand("cascade", "sample s(x) or w(x) on a dyadic grid");
  add_order(cascade, o.order)->required();
  cascade->add_option("--depth", o.depth, "dyadic depth J (spacing 2^-J)")
      ->check(CLI::Range(0, 20))
      ->capture_default_str();
  cascade->add_flag("--wavelet", o.wavelet, "sample the mother wavelet instead");
  cascade->add_option("--svg", o.svg_path, "write a line plot");

  auto* tables = app.add_subcommand("tables", "dump moment, two-point and connection tables");
  add_order(tables, o.order)->capture_default_str();

  auto* hamiltonian = app.add_subcommand("hamiltonian", "assemble and export the Hamiltonian");
  add_truncation(hamiltonian, o);
  hamiltonian->add_option("--out", o.format, "output format: csv|json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  hamiltonian->add_option("--svg", o.svg_path, "write a matrix heat map");

  auto* solve = app.add_subcommand("solve", "diagonalize and compare with n + 1/2");
  add_truncation(solve, o);
  solve->add_option("--states", o.states, "number of eigenvalues to print (0 = all)")
      ->check(CLI::NonNegativeNumber);

  std::string mode = "M";
  std::optional<int> sweep_k0, sweep_ns, sweep_m, sweep_from, sweep_to, sweep_states;
  std::optional<std::string> sweep_out, sweep_svg;
  WaveletRange sweep_policy = WaveletRange::FixedIndex;
  int sweep_order = 3;
  auto* sweep = app.add_subcommand("sweep", "convergence sweep over Ns=Nw or over M");
  sweep->add_option("--mode", mode, "M (scale sweep) or N (translation sweep)")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  add_order(sweep, sweep_order)->capture_default_str();
  sweep->add_option("--k0", sweep_k0, "coarsest scale");
  sweep->add_option("--Ns", sweep_ns, "fixed Ns = Nw for a scale sweep")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--M", sweep_m, "fixed M for a translation sweep")->check(CLI::Range(0, 8));
  sweep->add_option("--from", sweep_from, "first value of the swept parameter")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--to", sweep_to, "last value of the swept parameter")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--states", sweep_states, "number of tracked eigenvalues")
      ->check(CLI::Range(1, 64));
  sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");
  sweep->add_option("--svg", sweep_svg, "write an SVG chart");
  sweep->add_option("--wavelet-range", sweep_policy, "wavelet translation window: fixed|scaled")
      ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    return {std::nullopt, kExitUsage, usage_error(*sub, e.what())};
  }

  const CLI::App* used = app.get_subcommands().front();
  auto fail = [&](const std::string& what) {
    return ParseOutcome{std::nullopt, kExitUsage, usage_error(*used, what)};
  };

  if (used == filters) {
    o.command = Subcommand::Filters;
  } else if (used == cascade) {
    o.command = Subcommand::Cascade;
    if (o.order < 2) return fail("cascade needs K >= 2 (the Haar function has no integer bootstrap)");
  } else if (used == tables) {
    o.command = Subcommand::Tables;
  } else if (used == hamiltonian) {
    o.command = Subcommand::Hamiltonian;
  } else if (used == solve) {
    o.command = Subcommand::Solve;
  } else {
    o.command = Subcommand::Sweep;
    SweepConfig c = kModes.at(mode) == SweepMode::ScaleSweep ? SweepConfig::scale_defaults()
                                                             : SweepConfig::translation_defaults();
    c.order = sweep_order;
    c.policy = sweep_policy;
    if (sweep_k0) c.base_scale = *sweep_k0;
    if (sweep_ns) {
      if (c.mode == SweepMode::TranslationSweep) return fail("--Ns is swept in translation mode; use --from/--to");
      c.half_range = *sweep_ns;
    }
    if (sweep_m) {
      if (c.mode == SweepMode::ScaleSweep) return fail("--M is swept in scale mode; use --from/--to");
      c.extra_scales = *sweep_m;
    }
    if (sweep_from) c.range_begin = *sweep_from;
    if (sweep_to) c.range_end = *sweep_to;
    if (sweep_states) c.states = *sweep_states;
    c.csv_path = sweep_out;
    c.svg_path = sweep_svg;
    if (c.range_begin > c.range_end) return fail("--from must not exceed --to");
    if (c.mode == SweepMode::ScaleSweep && c.range_end > 8) return fail("M above 8 is not supported");
    o.sweep = c;
    o.order = c.order;
  }

  const bool needs_kinetic = o.command == Subcommand::Tables ||
                             o.command == Subcommand::Hamiltonian ||
                             o.command == Subcommand::Solve || o.command == Subcommand::Sweep;
  if (needs_kinetic && o.order != 3) {
    return fail("the kinetic term needs a differentiable scaling function: only K=3 is supported");
  }
  return {o, kExitOk, {}};
}

}  // namespace wqm::cli
