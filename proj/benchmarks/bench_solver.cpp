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

#include <random>

#include <benchmark/benchmark.h>

#include "wqm/basis.hpp"
#include "wqm/cascade.hpp"
#include "wqm/eig.hpp"
#include "wqm/filters.hpp"
#include "wqm/hamiltonian.hpp"
#include "wqm/integrals.hpp"

namespace {

using namespace wqm;

const IntegralTables& tables() {
  static const IntegralTables t = IntegralTables::compute(make_filter_bank(3));
  return t;
}

void BM_IntegralTables(benchmark::State& state) {
  const FilterBank bank = make_filter_bank(3);
  for (auto _ : state) benchmark::DoNotOptimize(IntegralTables::compute(bank));
}
BENCHMARK(BM_IntegralTables);

void BM_RefineScaling(benchmark::State& state) {
  const FilterBank bank = make_filter_bank(3);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(refine_scaling(bank, depth));
}
BENCHMARK(BM_RefineScaling)->Arg(8)->Arg(12)->Arg(16);

void BM_Assemble(benchmark::State& state) {
  const BasisSet basis = build_basis(0, 5, 5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(basis, tables()));
  state.counters["size"] = static_cast<double>(basis.size());
}
BENCHMARK(BM_Assemble)->DenseRange(0, 2);

void BM_Solve(benchmark::State& state) {
  const HamiltonianMatrix h = assemble(build_basis(0, 5, 5, static_cast<int>(state.range(0))), tables());
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric(h));
  state.counters["size"] = static_cast<double>(h.size());
}
BENCHMARK(BM_Solve)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_JacobiRandom(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c <= r; ++c) a(r, c) = a(c, r) = u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric(a));
}
BENCHMARK(BM_JacobiRandom)->RangeMultiplier(2)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
