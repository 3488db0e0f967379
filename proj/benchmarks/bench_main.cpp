/*
   Copyright 2026 The chainring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "chainring/groebner.hpp"
#include "chainring/localring.hpp"
#include "chainring/minrank.hpp"
#include "chainring/rankdecode.hpp"
#include "chainring/solve.hpp"

using namespace chainring;

namespace {

std::vector<MultiPoly> z8_system() {
  auto ctx = PolyContext::create(integers_mod(8), {"x", "y"});
  return {parse_poly(ctx, "4*x^2*y + y^3 + 2*y + 4"), parse_poly(ctx, "4*x*y^2")};
}

// Three random quadrics in three variables over Z/p^k.
std::vector<MultiPoly> random_quadrics(std::uint64_t p, unsigned k, std::uint64_t seed) {
  auto R = IntegerModRing::create(p, k);
  auto ctx = PolyContext::create(R, {"x", "y", "z"});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, R->size() - 1);
  std::vector<MultiPoly> F;
  for (int i = 0; i < 3; ++i) {
    std::vector<Term> ts;
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; a + b <= 2; ++b)
        for (unsigned c = 0; a + b + c <= 2; ++c) ts.push_back({Elem{coef(rng)}, {a, b, c}});
    F.push_back(MultiPoly::from_terms(ctx, std::move(ts)));
  }
  return F;
}

MinRankInstance four_by_four() {
  auto R = integers_mod(8);
  return homogeneous_instance(R,
                              {RingMatrix::from_ints(R, {{0, 0, 0, 7}, {1, 0, 0, 5}, {0, 1, 0, 2}, {0, 0, 1, 4}}),
                               RingMatrix::from_ints(R, {{0, 0, 7, 4}, {0, 0, 5, 3}, {1, 0, 2, 5}, {0, 1, 4, 2}}),
                               RingMatrix::from_ints(R, {{2, 2, 0, 4}, {4, 2, 0, 6}, {0, 4, 2, 4}, {0, 6, 6, 0}})},
                              1);
}

Elem ext_elem(const GaloisExtension& E, std::vector<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(E.base().from_int(x));
  v.resize(E.degree(), Elem{0});
  return E.from_coords(v);
}

RankDecodingInstance z8_decoding() {
  auto E = build_extension(IntegerModRing::create(2, 3), 3);
  RankDecodingInstance rd;
  rd.ext = E;
  rd.G = {{ext_elem(*E, {1}), ext_elem(*E, {2, 1, 2}), ext_elem(*E, {0, 3, 1})}};
  rd.y = {ext_elem(*E, {3, 3, 4}), ext_elem(*E, {6, 7, 5}), ext_elem(*E, {5, 4, 2})};
  rd.r = 1;
  return rd;
}

void BM_GroebnerZ8(benchmark::State& state) {
  auto F = z8_system();
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(F));
}
BENCHMARK(BM_GroebnerZ8);

void BM_SolveQuadrics(benchmark::State& state) {
  auto F = random_quadrics(2, static_cast<unsigned>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_system(F));
}
BENCHMARK(BM_SolveQuadrics)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SolveLifting(benchmark::State& state) {
  auto F = random_quadrics(2, static_cast<unsigned>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_system_lifting(F));
}
BENCHMARK(BM_SolveLifting)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MinRank(benchmark::State& state) {
  auto inst = four_by_four();
  auto strategy = static_cast<MinRankStrategy>(state.range(0));
  state.SetLabel(to_string(strategy));
  for (auto _ : state) benchmark::DoNotOptimize(solve_minrank(inst, strategy));
}
BENCHMARK(BM_MinRank)
    ->Arg(static_cast<int>(MinRankStrategy::KipnisShamir))
    ->Arg(static_cast<int>(MinRankStrategy::SupportMinorsGroebner))
    ->Arg(static_cast<int>(MinRankStrategy::SupportMinorsLinearization))
    ->Unit(benchmark::kMillisecond);

void BM_Decode(benchmark::State& state) {
  auto rd = z8_decoding();
  auto strategy = static_cast<DecodeStrategy>(state.range(0));
  state.SetLabel(to_string(strategy));
  for (auto _ : state) benchmark::DoNotOptimize(decode(rd, strategy));
}
BENCHMARK(BM_Decode)
    ->Arg(static_cast<int>(DecodeStrategy::Linearization))
    ->Arg(static_cast<int>(DecodeStrategy::Groebner))
    ->Arg(static_cast<int>(DecodeStrategy::MinRank))
    ->Unit(benchmark::kMillisecond);

}  // namespace

// libbenchmark_main.a ships LTO bytecode from another compiler build, so define main here.
BENCHMARK_MAIN();
