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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "wqm/cli/args.hpp"
#include "wqm/cli/commands.hpp"
#include "wqm/cli/sweep.hpp"

namespace wqm::cli {
namespace {

Options parsed(const std::vector<std::string>& args) {
  ParseOutcome p = parse_args(args);
  EXPECT_TRUE(p.options.has_value()) << p.message;
  return p.options.value_or(Options{});
}

int exit_code(const std::vector<std::string>& args) { return parse_args(args).exit_code; }

std::string run_ok(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  EXPECT_EQ(run(parsed(args), out, err), kExitOk) << err.str();
  return out.str();
}

TEST(ParseArgs, SolveFlags) {
  const Options o = parsed({"solve", "--K", "3", "--Ns", "4", "--Nw", "6", "--M", "2"});
  EXPECT_EQ(o.command, Subcommand::Solve);
  EXPECT_EQ(o.order, 3);
  EXPECT_EQ(o.ns, 4);
  EXPECT_EQ(o.nw, 6);
  EXPECT_EQ(o.m, 2);
  EXPECT_EQ(o.policy, WaveletRange::FixedIndex);
}

TEST(ParseArgs, WaveletRangePolicy) {
  EXPECT_EQ(parsed({"solve", "--wavelet-range", "scaled"}).policy, WaveletRange::ScaledWithResolution);
}

TEST(ParseArgs, SweepDefaults) {
  const Options m = parsed({"sweep", "--mode", "M", "--Ns", "5"});
  EXPECT_EQ(m.sweep.mode, SweepMode::ScaleSweep);
  EXPECT_EQ(m.sweep.half_range, 5);
  EXPECT_EQ(m.sweep.range_begin, 0);
  EXPECT_EQ(m.sweep.range_end, 2);
  EXPECT_EQ(m.sweep.states, 9);

  const Options n = parsed({"sweep", "--mode", "N"});
  EXPECT_EQ(n.sweep.mode, SweepMode::TranslationSweep);
  EXPECT_EQ(n.sweep.extra_scales, 1);
  EXPECT_EQ(n.sweep.range_begin, 1);
  EXPECT_EQ(n.sweep.range_end, 8);
}

TEST(ParseArgs, UsageErrors) {
  EXPECT_EQ(exit_code({}), kExitUsage);
  EXPECT_EQ(exit_code({"solve", "--K", "7"}), kExitUsage);
  EXPECT_EQ(exit_code({"solve", "--K", "2"}), kExitUsage);
  EXPECT_EQ(exit_code({"solve", "--Ns", "-1"}), kExitUsage);
  EXPECT_EQ(exit_code({"solve", "--bogus"}), kExitUsage);
  EXPECT_EQ(exit_code({"cascade", "--K", "1"}), kExitUsage);
  EXPECT_EQ(exit_code({"sweep", "--from", "3", "--to", "1"}), kExitUsage);
  EXPECT_EQ(exit_code({"frobnicate"}), kExitUsage);
}

TEST(ParseArgs, HelpExitsCleanly) {
  const ParseOutcome p = parse_args({"--help"});
  EXPECT_FALSE(p.options.has_value());
  EXPECT_EQ(p.exit_code, kExitOk);
  EXPECT_NE(p.message.find("sweep"), std::string::npos);
}

TEST(Run, FiltersPrintRoundTrippableDigits) {
  const std::string text = run_ok({"filters", "--K", "2"});
  EXPECT_NE(text.find("index,h,g"), std::string::npos);
  EXPECT_NE(text.find("0,0.4829629131445341,-0.12940952255126034"), std::string::npos);
}

TEST(Run, TablesHaveThreeSections) {
  const std::string text = run_ok({"tables"});
  EXPECT_NE(text.find("m,M_m"), std::string::npos);
  EXPECT_NE(text.find("n,X0,X1,X2"), std::string::npos);
  EXPECT_NE(text.find("1,0.81740116781088012"), std::string::npos);
}

TEST(Run, SolveReportsCertifiedSpectrum) {
  const std::string text = run_ok({"solve", "--M", "0", "--states", "2"});
  EXPECT_NE(text.find("certified=yes"), std::string::npos);
  EXPECT_NE(text.find("n,E_n,exact,abs_error"), std::string::npos);
  EXPECT_NE(text.find("\n0,0.5063"), std::string::npos);
}

TEST(Run, HamiltonianFormats) {
  const std::string csv = run_ok({"hamiltonian", "--Ns", "1", "--Nw", "1", "--M", "0"});
  const std::string json = run_ok({"hamiltonian", "--Ns", "1", "--Nw", "1", "--M", "0", "--out", "json"});
  EXPECT_NE(json.find("\"basis\""), std::string::npos);
  EXPECT_NE(json.find("\"kind\": \"w\""), std::string::npos);
  EXPECT_FALSE(csv.empty());
  EXPECT_EQ(csv.find('{'), std::string::npos);
}

TEST(Sweep, CsvIsDeterministic) {
  SweepConfig c = SweepConfig::scale_defaults();
  c.range_end = 1;
  c.states = 3;
  std::ostringstream a, b;
  write_csv(a, run_sweep(c));
  write_csv(b, run_sweep(c));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("M,n,E_n,abs_error"), std::string::npos);
}

TEST(Sweep, TranslationSweepLogsTheError) {
  SweepConfig c = SweepConfig::translation_defaults();
  c.range_begin = 2;
  c.range_end = 3;
  c.states = 2;
  const SweepResult r = run_sweep(c);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.rows[0].parameter, 2);
  EXPECT_EQ(r.rows[3].state, 1);
  std::ostringstream out;
  write_csv(out, r);
  EXPECT_NE(out.str().find("Ns,n,E_n,ln_abs_error"), std::string::npos);
}

TEST(Sweep, GroundStateAtOneExtraScale) {
  const std::vector<double> e = lowest_eigenvalues(0, 5, 1, 1, WaveletRange::FixedIndex);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_NEAR(e[0], 0.5007515, 1e-6);
}

TEST(Sweep, WritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "wqm_cli_test";
  std::filesystem::create_directories(dir);
  SweepConfig c = SweepConfig::scale_defaults();
  c.range_end = 0;
  c.states = 2;
  c.csv_path = (dir / "s.csv").string();
  c.svg_path = (dir / "s.svg").string();
  run_sweep(c);
  std::ifstream svg(*c.svg_path);
  std::string first;
  std::getline(svg, first);
  EXPECT_NE(first.find("<svg"), std::string::npos);
  EXPECT_TRUE(std::filesystem::file_size(*c.csv_path) > 0);
  std::filesystem::remove_all(dir);
}

int binary_status(const std::string& args) {
  const std::string cmd = std::string(WQM_BINARY) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(binary_status("filters --K 1"), kExitOk);
  EXPECT_EQ(binary_status("solve --K 9"), kExitUsage);
  EXPECT_EQ(binary_status("--help"), kExitOk);
  EXPECT_EQ(binary_status("sweep --out /nonexistent/dir/x.csv --to 0 --states 1"), kExitValidation);
}

}  // namespace
}  // namespace wqm::cli
