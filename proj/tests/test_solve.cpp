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

#include "chainring/oracles.hpp"
#include "chainring/solve.hpp"
#include "chainring/upoly.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chainring;
using namespace testsupport;

namespace {

std::vector<std::vector<Elem>> tuples(std::initializer_list<std::vector<std::uint64_t>> list) {
  std::vector<std::vector<Elem>> out;
  for (const auto& t : list) {
    std::vector<Elem> v;
    for (auto c : t) v.push_back(Elem{c});
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("univariate goldens") {
  auto ctx = lex(integers_mod(25), {"x"});
  auto S = solve_univariate(polys(ctx, {"x^5 - x", "5*x + 10"}), 0);
  CHECK(S.expand() == tuples({{18}}));

  auto c8 = lex(integers_mod(8), {"y"});
  CHECK(solve_univariate(polys(c8, {"y^4 + 2*y^2 + 4*y", "2*y^3 + 4*y"}), 0).expand() ==
        tuples({{0}, {2}, {4}, {6}}));
  CHECK(solve_univariate(polys(c8, {"y"}), 0).expand() == tuples({{0}}));

  auto all = solve_univariate({MultiPoly(c8)}, 0);
  CHECK(all.rows.size() == 1);
  CHECK_FALSE(all.rows[0][0].has_value());
  CHECK(all.count() == 8);
  CHECK(solve_univariate(polys(c8, {"4"}), 0).rows.empty());
}

TEST_CASE("the worked Z/8 system has 16 solutions") {
  auto ctx = lex(integers_mod(8), {"x", "y"});
  auto F = polys(ctx, {"4*x^2*y + y^3 + 2*y + 4", "4*x*y^2"});
  auto S = solve_system(F);
  // compressed as (t, 2) and (t, 6)
  REQUIRE(S.rows.size() == 2);
  CHECK_FALSE(S.rows[0][0].has_value());
  CHECK(S.rows[0][1] == Elem{2});
  CHECK(S.rows[1][1] == Elem{6});
  CHECK(S.count() == 16);
  auto brute = brute_solve(F);
  CHECK(brute.rows.size() == 16);
  CHECK(S.expand() == brute.expand());

  SolveOptions fe;
  fe.field_equations = true;
  auto ctx2 = PolyContext::create(integers_mod(8), {"x", "y"}, MonomialOrder(OrderKind::Lex, {1, 0}));
  auto S2 = solve_system(polys(ctx2, {"4*x^2*y + y^3 + 2*y + 4", "4*x*y^2"}), fe);
  CHECK(S2.expand() == brute.expand());
  CHECK(solve_system_lifting(F).expand() == brute.expand());
}

TEST_CASE("small systems") {
  auto ctx = lex(integers_mod(9), {"x", "y"});
  CHECK(solve_system(polys(ctx, {"x - 1", "y - x"})).expand() == tuples({{1, 1}}));
  CHECK(solve_system(polys(ctx, {"1"})).rows.empty());
  CHECK(brute_solve(polys(ctx, {"1"})).rows.empty());
  auto c25 = lex(integers_mod(25), {"x"});
  auto L = solve_system_lifting(polys(c25, {"x^5 - x", "5*x + 10"}));
  CHECK(L.expand() == tuples({{18}}));
  CHECK(solve_system_lifting(polys(c25, {"x - 17"})).expand() == tuples({{17}}));
  auto zp = solve_system_lifting(polys(c25, {"5*x"}));
  CHECK(zp.diagnostics.size() == 1);
  CHECK(zp.count() == 5);
}

TEST_CASE("vanishing polynomials") {
  auto R8 = IntegerModRing::create(2, 3);
  auto ctx = lex(R8, {"x"});
  CHECK(ring_vanishing_polynomial(ctx, 0) == parse_poly(ctx, "(x^2 - x)^2 - 2*(x^2 - x)"));
  auto search = brute_vanishing_poly(*R8);
  CHECK(search.degree == 4);
  CHECK(std::find(search.polys.begin(), search.polys.end(), vanishing_polynomial(*R8)) != search.polys.end());

  auto F7 = IntegerModRing::create(7, 1);
  auto c7 = lex(F7, {"x"});
  CHECK(ring_vanishing_polynomial(c7, 0) == parse_poly(c7, "x^7 - x"));
  auto GF4 = GaloisRing::create(2, 1, {1, 1, 1});
  auto c4 = lex(GF4, {"x"});
  CHECK(ring_vanishing_polynomial(c4, 0) == parse_poly(c4, "x^4 - x"));

  std::vector<ChainRingPtr> rings{IntegerModRing::create(2, 2), IntegerModRing::create(3, 2),
                                  IntegerModRing::create(3, 1)};
  for (const auto& R : rings) {
    CAPTURE(R->describe());
    const auto& f = vanishing_polynomial(*R);
    auto s = brute_vanishing_poly(*R);
    CHECK(f.size() - 1 == s.degree);
    CHECK(std::find(s.polys.begin(), s.polys.end(), f) != s.polys.end());
  }
  // too large for the exhaustive search; check the vanishing property only
  auto G = GaloisRing::create(2, 2, {1, 1, 1});
  const auto& g = vanishing_polynomial(*G);
  CHECK(g.size() == 9);
  for (std::uint64_t c = 0; c < G->size(); ++c) CHECK(upoly::eval(*G, g, Elem{c}).code == 0);
}

TEST_CASE("solvers agree with exhaustive search") {
  std::mt19937_64 rng(31);
  int systems = 0;
  for (auto R : {integers_mod(4), integers_mod(8), integers_mod(9)}) {
    for (int i = 0; i < 40; ++i) {
      auto ctx = lex(R, i % 4 == 0 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"});
      std::vector<MultiPoly> F;
      for (int j = 0; j < 2; ++j) F.push_back(random_poly(ctx, rng, 3, 3));
      auto brute = brute_solve(F).expand();
      CHECK(solve_system(F).expand() == brute);
      CHECK(solve_system_lifting(F).expand() == brute);
      SolveOptions fe;
      fe.field_equations = true;
      CHECK(solve_system(F, fe).expand() == brute);
      ++systems;
    }
  }
  CHECK(systems >= 100);
}

TEST_CASE("product rings are solved componentwise") {
  std::mt19937_64 rng(37);
  for (auto R : {integers_mod(6), integers_mod(12)}) {
    for (int i = 0; i < 20; ++i) {
      auto ctx = lex(R, {"x", "y"});
      std::vector<MultiPoly> F{random_poly(ctx, rng, 2, 3), random_poly(ctx, rng, 2, 3)};
      auto brute = brute_solve(F).expand();
      CHECK(solve_system(F).expand() == brute);
      CHECK(solve_system_lifting(F).expand() == brute);
    }
  }
}

TEST_CASE("Galois ring systems") {
  std::mt19937_64 rng(41);
  auto S = GaloisRing::create(2, 2, {1, 1, 1});
  auto ctx = lex(S, {"x", "y"});
  for (int i = 0; i < 10; ++i) {
    std::vector<MultiPoly> F{random_poly(ctx, rng, 2, 3), random_poly(ctx, rng, 2, 3)};
    auto brute = brute_solve(F).expand();
    CHECK(solve_system(F).expand() == brute);
    CHECK(solve_system_lifting(F).expand() == brute);
  }
}

TEST_CASE("solution cap truncates") {
  auto ctx = lex(integers_mod(8), {"x", "y"});
  SolveOptions o;
  o.max_solutions = 3;
  auto S = solve_system(polys(ctx, {"2*x*y"}), o);
  CHECK(S.truncated);
  CHECK(S.rows.size() == 3);
}
