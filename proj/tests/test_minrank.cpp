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

#include <random>

#include "chainring/minrank.hpp"
#include "chainring/oracles.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chainring;

namespace {

std::vector<std::vector<Elem>> tuples(std::initializer_list<std::vector<std::uint64_t>> list) {
  std::vector<std::vector<Elem>> out;
  for (const auto& t : list) {
    std::vector<Elem> v;
    for (auto c : t) v.push_back(Elem{c});
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MinRankInstance four_by_four() {
  auto R = integers_mod(8);
  return homogeneous_instance(R,
                              {RingMatrix::from_ints(R, {{0, 0, 0, 7}, {1, 0, 0, 5}, {0, 1, 0, 2}, {0, 0, 1, 4}}),
                               RingMatrix::from_ints(R, {{0, 0, 7, 4}, {0, 0, 5, 3}, {1, 0, 2, 5}, {0, 1, 4, 2}}),
                               RingMatrix::from_ints(R, {{2, 2, 0, 4}, {4, 2, 0, 6}, {0, 4, 2, 4}, {0, 6, 6, 0}})},
                              1);
}

MinRankInstance three_by_three() {
  auto R = integers_mod(8);
  return MinRankInstance{R,
                         {RingMatrix::from_ints(R, {{5, 2, 3}, {5, 1, 4}, {4, 3, 6}}),
                          RingMatrix::from_ints(R, {{1, 2, 0}, {0, 1, 3}, {0, 2, 1}}),
                          RingMatrix::from_ints(R, {{0, 2, 1}, {1, 0, 3}, {0, 5, 5}}),
                          RingMatrix::from_ints(R, {{0, 5, 5}, {0, 1, 0}, {1, 2, 5}})},
                         1};
}

}  // namespace

TEST_CASE("homogeneous 4x4 instance has four solutions") {
  auto inst = four_by_four();
  auto expected = tuples({{0, 0, 0}, {4, 4, 2}, {0, 0, 4}, {4, 4, 6}});
  CHECK(brute_minrank(inst) == expected);
  CHECK(solve_minrank(inst, MinRankStrategy::KipnisShamir) == expected);
  CHECK(solve_minrank(inst, MinRankStrategy::SupportMinorsGroebner) == expected);
  CHECK(solve_minrank(inst, MinRankStrategy::SupportMinorsLinearization) == expected);
  CHECK(solve_minrank(transpose_instance(inst), MinRankStrategy::SupportMinorsLinearization) == expected);
  // homogeneous closure
  const Ring& R = *inst.ring;
  for (const auto& x : expected)
    for (std::uint64_t a = 0; a < 8; ++a) {
      std::vector<Elem> ax;
      for (Elem e : x) ax.push_back(R.mul(Elem{a}, e));
      CHECK(std::binary_search(expected.begin(), expected.end(), ax));
    }
}

TEST_CASE("Kipnis-Shamir model and basis") {
  auto inst = four_by_four();
  auto m = ks_model(inst, {3});
  CHECK(m.context->vars() == std::vector<std::string>{"z1", "z2", "z3", "x1", "x2", "x3"});
  CHECK(m.equations.size() == 12);
  auto G = groebner_basis(m.equations).generators;
  auto ctx = m.context;
  std::vector<MultiPoly> printed = testsupport::polys(
      ctx, {"2*z1*x3 + 6*x3", "2*z2*x3 + 6*x3", "2*z3*x3 + 6*x3", "x1 + 2*x3", "x2 + 2*x3", "4*x3"});
  for (const auto& g : printed) CHECK(strong_reduce(g, G).is_zero());
  for (const auto& g : G) CHECK(strong_reduce(g, printed).is_zero());
}

TEST_CASE("linearized Support-Minors echelon form") {
  auto lin = sm_linearization(four_by_four(), 3);
  CHECK(lin.A.rows() == 24);
  CHECK(lin.columns.front() == "x1*z1");
  CHECK(lin.columns.back() == "x3*z4");
  std::vector<std::vector<std::int64_t>> printed(12, std::vector<std::int64_t>(12, 0));
  for (int i = 0; i < 11; ++i) {
    printed[i][i] = (i % 3 == 2) ? 2 : 1;
    printed[i][11] = 2;
  }
  printed[11][11] = 4;
  CHECK(lin.echelon == RingMatrix::from_ints(integers_mod(8), printed));
  CHECK(lin.C == RingMatrix::from_ints(integers_mod(8), {{1, 0, 2}, {0, 1, 2}, {0, 0, 4}}));
}

TEST_CASE("affine 3x3 instance") {
  auto inst = three_by_three();
  auto expected = tuples({{1, 3, 6}});
  CHECK(brute_minrank(inst) == expected);
  CHECK(solve_minrank(inst, MinRankStrategy::KipnisShamir) == expected);
  CHECK(solve_minrank(inst, MinRankStrategy::SupportMinorsGroebner) == expected);
  CHECK(solve_minrank(inst, MinRankStrategy::SupportMinorsLinearization) == expected);
}

TEST_CASE("Support-Minors equations") {
  auto inst = four_by_four();
  auto m = sm_model(inst);
  CHECK(m.context->vars() == std::vector<std::string>{"z1", "z2", "z3", "z4", "x1", "x2", "x3"});
  CHECK(m.equations.size() <= 24);
  auto R = integers_mod(4);
  auto single = homogeneous_instance(R, {RingMatrix::identity(R, 2)}, 1);
  auto sols = solve_minrank(single, MinRankStrategy::SupportMinorsGroebner);
  CHECK(sols == brute_minrank(single));
  CHECK(sols == tuples({{0}}));  // 2 I has rank 2 over Z/4
  auto full = homogeneous_instance(R, {RingMatrix::identity(R, 2)}, 2);
  CHECK(sm_model(full).equations.empty());
  CHECK(solve_minrank(full).size() == 4);
}

TEST_CASE("random instances agree with enumeration") {
  std::mt19937_64 rng(17);
  for (std::uint64_t n : {4, 8, 9, 6}) {
    auto R = integers_mod(n);
    std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(n) - 1);
    int nonempty = 0;
    for (int t = 0; t < 6; ++t) {
      std::vector<RingMatrix> Ms{RingMatrix(R, 3, 3)};
      for (int l = 0; l < 2; ++l) {
        std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(3));
        std::vector<std::int64_t> u(3), v(3);
        for (int i = 0; i < 3; ++i) u[i] = pick(rng), v[i] = pick(rng);
        // M_1 is planted with rank <= 1
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) rows[i][j] = l == 0 ? u[i] * v[j] : pick(rng);
        Ms.push_back(RingMatrix::from_ints(R, rows));
      }
      MinRankInstance inst{R, Ms, 1};
      CAPTURE(n);
      auto brute = brute_minrank(inst);
      CHECK(solve_minrank(inst, MinRankStrategy::KipnisShamir) == brute);
      CHECK(solve_minrank(inst, MinRankStrategy::SupportMinorsGroebner) == brute);
      CHECK(solve_minrank(transpose_instance(inst), MinRankStrategy::SupportMinorsLinearization) == brute);
      if (brute.size() > 1) ++nonempty;
    }
    CHECK(nonempty > 0);
  }
}
