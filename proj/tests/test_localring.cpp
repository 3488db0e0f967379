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

#include <algorithm>
#include <random>

#include "chainring/localring.hpp"
#include "chainring/oracles.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chainring;
using namespace testsupport;

namespace {

// Z8[X]/(X^2 + 4, 2X): basis 1, X with Ann(X) = 2
LocalRingPtr small_ring() { return quotient_local_ring(2, 3, {4, 0, 1}, 1); }

LocalRingPresentation presentation_of(const LocalRing& L) { return L.presentation(); }

}  // namespace

TEST_CASE("quotient presentation") {
  auto L = small_ring();
  const auto& p = L->presentation();
  CHECK(p.ann == std::vector<unsigned>{3, 1});
  CHECK(L->size() == 16);
  CHECK(L->base().size() == 8);
  CHECK(p.mul[1][1] == std::vector<Elem>{Elem{4}, Elem{0}});
  Elem t = L->basis(1);
  CHECK(L->to_string(L->mul(t, t)) == "4");
  CHECK(L->is_zero(L->mul(L->from_int(2), t)));
  CHECK(L->to_string(L->add(L->from_int(6), t)) == "6+t");
  CHECK(L->named_constant("t") == t);
}

TEST_CASE("ring axioms hold by exhaustion") {
  auto L = small_ring();
  const std::uint64_t n = L->size();
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      Elem x{a}, y{b};
      CHECK(L->mul(x, y) == L->mul(y, x));
      CHECK(L->sub(L->add(x, y), y) == x);
      for (std::uint64_t c = 0; c < n; c += 3) {
        Elem z{c};
        CHECK(L->mul(L->mul(x, y), z) == L->mul(x, L->mul(y, z)));
        CHECK(L->mul(x, L->add(y, z)) == L->add(L->mul(x, y), L->mul(x, z)));
      }
    }
  // local: the non-units are closed under addition
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      if (!L->is_unit(Elem{a}) && !L->is_unit(Elem{b})) CHECK_FALSE(L->is_unit(L->add(Elem{a}, Elem{b})));
}

TEST_CASE("invalid presentations are rejected") {
  auto base = presentation_of(*small_ring());
  {
    auto p = base;
    p.ann[1] = 4;
    CHECK_THROWS_AS(LocalRing::create(p), NotARing);
  }
  {
    auto p = base;
    p.mul[0][1] = {Elem{1}, Elem{0}};  // 1 * X = 1 breaks commutativity and unity
    CHECK_THROWS_AS(LocalRing::create(p), NotARing);
  }
  {
    auto p = base;
    p.mul[1][1] = {Elem{1}, Elem{0}};  // 2 * X^2 = 2 != 0
    CHECK_THROWS_AS(LocalRing::create(p), NotARing);
  }
  {
    auto p = base;
    p.one = {Elem{0}, Elem{1}};
    CHECK_THROWS_AS(LocalRing::create(p), NotARing);
  }
  {
    auto p = base;
    p.base = nullptr;
    CHECK_THROWS_AS(LocalRing::create(p), NotARing);
  }
  CHECK_THROWS_AS(quotient_local_ring(2, 3, {1, 0, 1}, 0), NotARing);
}

TEST_CASE("zero tests agree") {
  // u = 0 in L  <=>  p^(s - ann_j) u_j = 0  <=>  u_j = 0 mod p^ann_j
  auto L = small_ring();
  const auto& p = L->presentation();
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b) {
      std::vector<Elem> u{Elem{a}, Elem{b}};
      bool by_code = L->from_coords(u).code == 0;
      bool by_scaling = coordinates_vanish(p, u);
      bool by_residue = a % 8 == 0 && b % 2 == 0;
      CHECK(by_code == by_scaling);
      CHECK(by_code == by_residue);
    }
}

TEST_CASE("system expansion golden") {
  auto L = small_ring();
  auto ctx = lex(L, {"x"});
  auto F = polys(ctx, {"x^3 + 2*x + 4"});
  auto E = expand_system(F);
  CHECK(E.context->vars() == std::vector<std::string>{"x_1", "x_2"});
  CHECK(strings(E.equations) == std::vector<std::string>{"x_1^3 + 4*x_1*x_2^2 + 2*x_1 + 4", "4*x_1^2*x_2"});
  auto S = solve_local(F);
  std::vector<std::string> roots;
  for (const auto& r : S.expand()) roots.push_back(L->to_string(r[0]));
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<std::string>{"2", "2+t", "6", "6+t"});
  CHECK(S.expand() == brute_solve(F).expand());
  CHECK(solve_local(F, SolveMethod::Lifting).expand() == S.expand());
}

TEST_CASE("gamma one is the base ring") {
  LocalRingPresentation p;
  p.base = IntegerModRing::create(3, 2);
  p.ann = {2};
  p.mul = {{{Elem{1}}}};
  p.one = {Elem{1}};
  auto L = LocalRing::create(p);
  CHECK(L->size() == 9);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b) CHECK(L->mul(Elem{a}, Elem{b}).code == (a * b) % 9);
  auto ctx = lex(L, {"x", "y"});
  auto F = polys(ctx, {"x^3 - x", "3*x*y + y^2"});
  CHECK(solve_local(F).expand() == brute_solve(F).expand());
}

TEST_CASE("local solving agrees with exhaustive search") {
  std::mt19937_64 rng(53);
  std::vector<LocalRingPtr> rings{small_ring(), quotient_local_ring(2, 2, {2, 0, 1}, 2),
                                  quotient_local_ring(3, 2, {0, 0, 1}, 1)};
  for (const auto& L : rings) {
    CAPTURE(L->describe());
    for (int i = 0; i < 12; ++i) {
      auto ctx = lex(L, i % 3 == 0 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"});
      std::vector<MultiPoly> F{random_poly(ctx, rng, 2, 3), random_poly(ctx, rng, 2, 2)};
      auto brute = brute_solve(F).expand();
      CHECK(solve_local(F).expand() == brute);
      CHECK(solve_local(F, SolveMethod::Lifting).expand() == brute);
    }
  }
}
