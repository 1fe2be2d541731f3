// Copyright 2026 The fglog Authors.
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

#include "fglog/formal_group.hpp"
#include "fglog/io.hpp"

namespace {

using namespace fglog;

AlgebraPtr qt1(int d) { return HopfAlgebra::build(*builtin::lookup("qt1", d)); }

// 1 + sum over variables of (t x + x^2); its inverse is dense through N.
Series sample(const AlgebraPtr &h, int nvars, int order) {
  Series s = Series::constant(TensorElement::unit(h, 1), nvars, order);
  const TensorElement t = parse_element(h, "t", 1);
  for (int v = 0; v < nvars; ++v) {
    const Series x = Series::variable(h, 1, nvars, order, v);
    s += x * Series::constant(t, nvars, order) + x * x;
  }
  return s;
}

void BM_SeriesMul(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const AlgebraPtr h = qt1(10);
  const Series a = mul_inverse(sample(h, 3, n));
  const Series b = a + sample(h, 3, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Substitute(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const AlgebraPtr h = qt1(10);
  const Series f = sample(h, 2, n) - Series::constant(TensorElement::unit(h, 1), 2, n);
  const Series x = Series::variable(h, 1, 3, n, 0);
  const Series y = Series::variable(h, 1, 3, n, 1);
  const Series z = Series::variable(h, 1, 3, n, 2);
  const std::vector<Series> args = {x + y * z, y + x * z};
  for (auto _ : state) benchmark::DoNotOptimize(substitute(f, args));
}
BENCHMARK(BM_Substitute)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AssociativityCheck(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const AlgebraPtr h = qt1(10);
  Series g(h, 1, 1, n);
  g.set_coefficient({1}, parse_element(h, "1", 1));
  g.set_coefficient({2}, parse_element(h, "t", 1));
  g.set_coefficient({3}, parse_element(h, "1/2 t^2", 1));
  g.set_polynomial();
  const FormalGroupLaw F(reconstruct_series(Logarithm(g), parse_element(h, "t⊗t", 2)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(F));
}
BENCHMARK(BM_AssociativityCheck)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
