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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqm/basis.hpp"

namespace wqm::cli {

enum class Subcommand { Filters, Cascade, Tables, Hamiltonian, Solve, Sweep };

enum class SweepMode {
  TranslationSweep,  // M fixed, Ns = Nw varied together
  ScaleSweep,        // Ns = Nw fixed, M varied
};

enum class MatrixFormat { Csv, Json };

struct SweepConfig {
  SweepMode mode = SweepMode::ScaleSweep;
  int order = 3;
  int base_scale = 0;
  int extra_scales = 1;  // held fixed by a translation sweep
  int half_range = 5;    // Ns = Nw, held fixed by a scale sweep
  int range_begin = 0;   // swept parameter, inclusive
  int range_end = 2;
  int states = 9;        // eigenvalue indices 0 .. states-1 are tracked
  WaveletRange policy = WaveletRange::FixedIndex;
  std::optional<std::string> csv_path;
  std::optional<std::string> svg_path;

  static SweepConfig translation_defaults();
  static SweepConfig scale_defaults();
};

struct Options {
  Subcommand command = Subcommand::Solve;
  int order = 3;
  int depth = 12;
  bool wavelet = false;
  int base_scale = 0;
  int ns = 5;
  int nw = 5;
  int m = 0;
  int states = 0;  // 0 = all
  WaveletRange policy = WaveletRange::FixedIndex;
  MatrixFormat format = MatrixFormat::Csv;
  std::optional<std::string> svg_path;
  SweepConfig sweep;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

struct ParseOutcome {
  std::optional<Options> options;  // empty when the process should exit
  int exit_code = kExitOk;
  std::string message;             // usage text or error, for stdout/stderr
};

/// Parses argv[1..]. Unknown flags, unsupported K, negative ranges and flags
/// that make no sense for the subcommand yield exit code 2 with usage text.
ParseOutcome parse_args(const std::vector<std::string>& args);

}  // namespace wqm::cli
