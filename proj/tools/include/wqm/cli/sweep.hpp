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

#include <ostream>
#include <string>
#include <vector>

#include "wqm/cli/args.hpp"

namespace wqm::cli {

struct SweepRow {
  int parameter;  // Ns for a translation sweep, M for a scale sweep
  int state;      // n
  double energy;  // E_n in hbar*omega
  double error;   // |E_n - (n + 1/2)|
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;  // ordered by parameter, then state
  bool certified = true;       // every eigensolve passed its residual check
};

/// Assembles and solves one point per swept value. Points run concurrently;
/// rows come back in deterministic order. Writes CSV/SVG when the config
/// names output paths (throws wqm::Error on I/O failure).
SweepResult run_translation_sweep(const SweepConfig& config);
SweepResult run_scale_sweep(const SweepConfig& config);
SweepResult run_sweep(const SweepConfig& config);

/// `#` metadata line, header, then one row per (parameter, state). The last
/// column is ln|error| for a translation sweep and the plain error for a
/// scale sweep.
void write_csv(std::ostream& out, const SweepResult& result);

/// Scale sweep only: states down, M across, six significant digits.
void render_table(std::ostream& out, const SweepResult& result);

std::string render_svg(const SweepResult& result);

/// The lowest `states` eigenvalues for one truncation.
std::vector<double> lowest_eigenvalues(int base_scale, int half_range, int extra_scales,
                                       int states, WaveletRange policy, bool* certified = nullptr);

}  // namespace wqm::cli
