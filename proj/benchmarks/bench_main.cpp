// Copyright 2026 The mannheim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "mannheim/css.hpp"
#include "mannheim/field.hpp"
#include "mannheim/linear_code.hpp"
#include "mannheim/polynomial.hpp"
#include "mannheim/qudit.hpp"

namespace {

using mannheim::GaussInt;
using mannheim::LinearCode;
using mannheim::Metric;
using mannheim::Modulus;
using mannheim::Polynomial;
using mannheim::PrimeField;
using mannheim::SearchOptions;

LinearCode big_code() {
  auto f = PrimeField::make({4, 1});
  return LinearCode::from_generator_poly(Polynomial::parse(f, "1+2i, -1+1i, -1i, 1"), 8,
                                         Modulus::XnPlus1);
}

void BM_Reduce(benchmark::State& state) {
  auto f = PrimeField::make({4, 1});
  std::int64_t re = -913, im = 477;
  for (auto _ : state) {
    GaussInt r = f->reduce({re, im});
    benchmark::DoNotOptimize(r);
    re = (re + 37) % 1000;
    im = (im - 53) % 1000;
  }
}
BENCHMARK(BM_Reduce);

void BM_FieldMul(benchmark::State& state) {
  auto f = PrimeField::make({5, 2});
  const auto& rs = f->residues();
  std::size_t i = 0, j = 7;
  for (auto _ : state) {
    GaussInt r = f->mul(rs[i], rs[j]);
    benchmark::DoNotOptimize(r);
    i = (i + 1) % rs.size();
    j = (j + 3) % rs.size();
  }
}
BENCHMARK(BM_FieldMul);

// Full 17^5 scan of the [[8, k1 = 5]] component code, by worker count.
void BM_DistanceScan(benchmark::State& state) {
  SearchOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LinearCode code = big_code();  // fresh object, nothing cached
    benchmark::DoNotOptimize(code.min_distance(Metric::Mannheim, opts));
  }
  state.SetItemsProcessed(state.iterations() * 1419857);
}
BENCHMARK(BM_DistanceScan)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_FourierLayer(benchmark::State& state) {
  auto f = PrimeField::make({2, 1});
  mannheim::StateVector s =
      mannheim::StateVector::basis_state(f, std::vector<GaussInt>(8, GaussInt{0, 0}));
  for (auto _ : state) {
    s.apply_hadamard(0);
    benchmark::DoNotOptimize(s.amps().data());
  }
  state.SetItemsProcessed(state.iterations() * 390625);
}
BENCHMARK(BM_FourierLayer)->Unit(benchmark::kMicrosecond);

void BM_SyndromeDecode(benchmark::State& state) {
  LinearCode code = big_code();
  std::vector<GaussInt> e(8, GaussInt{0, 0});
  e[3] = {1, 0};
  e[4] = {1, 0};
  auto syndrome = code.syndrome(e);
  for (auto _ : state) {
    auto res = code.syndrome_decode(syndrome, Metric::Mannheim, 2);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_SyndromeDecode)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
