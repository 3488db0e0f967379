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

#include "chainring/extension.hpp"
#include "chainring/oracles.hpp"
#include "chainring/skew.hpp"
#include "doctest.h"

using namespace chainring;

namespace {

std::vector<Elem> elems(std::initializer_list<std::uint64_t> codes) {
  std::vector<Elem> v;
  for (auto c : codes) v.push_back(Elem{c});
  return v;
}

// c_0 + c_1 alpha + c_2 alpha^2
Elem ext_elem(const GaloisExtension& E, std::vector<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(E.base().from_int(x));
  v.resize(E.degree(), Elem{0});
  return E.from_coords(v);
}

ExtensionPtr z8_cubic() { return build_extension(IntegerModRing::create(2, 3), 3); }

}  // namespace

TEST_CASE("degree-3 extension of Z/8") {
  auto E = z8_cubic();
  CHECK(E->residue_modulus() == elems({1, 1, 0, 1}));
  CHECK(E->modulus() == elems({7, 5, 6, 1}));
  const Ring& S = E->ring();
  Elem a = E->alpha();
  CHECK(S.pow(a, 7) == S.one());
  for (int i = 1; i < 7; ++i) CHECK(S.pow(a, static_cast<std::uint64_t>(i)) != S.one());
  CHECK(E->frobenius(a) == S.pow(a, 2));
  for (std::int64_t c = 0; c < 8; ++c) CHECK(E->frobenius(E->embed(Elem{static_cast<std::uint64_t>(c)})) == E->embed(Elem{static_cast<std::uint64_t>(c)}));
  CHECK(E->frobenius(E->frobenius(a, 1), -1) == a);
  // explicit modulus gives the same ring
  auto E2 = GaloisExtension::create(IntegerModRing::create(2, 3), elems({7, 5, 6, 1}));
  CHECK(E2->ring().describe() == S.describe());
  CHECK_THROWS_AS(GaloisExtension::create(IntegerModRing::create(2, 3), elems({1, 1, 0, 1})), DomainError);
}

TEST_CASE("Frobenius is an automorphism of order m") {
  std::mt19937_64 rng(3);
  for (auto E : {z8_cubic(), build_extension(IntegerModRing::create(2, 2), 2), build_extension(IntegerModRing::create(3, 2), 2)}) {
    const Ring& S = E->ring();
    std::uniform_int_distribution<std::uint64_t> pick(0, S.size() - 1);
    for (int t = 0; t < 100; ++t) {
      Elem x{pick(rng)}, y{pick(rng)};
      CHECK(E->frobenius(x, E->degree()) == x);
      CHECK(E->frobenius(S.add(x, y)) == S.add(E->frobenius(x), E->frobenius(y)));
      CHECK(E->frobenius(S.mul(x, y)) == S.mul(E->frobenius(x), E->frobenius(y)));
    }
  }
}

TEST_CASE("small extensions") {
  auto Z4 = IntegerModRing::create(2, 2);
  auto E = build_extension(Z4, 2);
  const Ring& S = E->ring();
  CHECK(S.pow(E->alpha(), 3) == S.one());
  CHECK(E->alpha() != S.one());
  auto one = build_extension(Z4, 1);
  CHECK(&one->ring() == Z4.get());
  CHECK(one->frobenius(Elem{3}) == Elem{3});
  // h divides X^(q^m - 1) - 1: checked for every construction
  for (unsigned m = 1; m <= 4; ++m) {
    auto Em = build_extension(IntegerModRing::create(2, 3), m);
    const Ring& Sm = Em->ring();
    CHECK(Sm.pow(Em->alpha(), (1u << m) - 1) == Sm.one());
  }
}

TEST_CASE("vector rank and support") {
  auto E = z8_cubic();
  std::vector<Elem> u{ext_elem(*E, {2, 0, 6}), Elem{0}, ext_elem(*E, {4, 0, 4})};
  CHECK(vector_rank(*E, u) == 1);
  auto M = matrix_representation(*E, u);
  CHECK(M.rows() == 3);
  CHECK(M(0, 0) == Elem{2});
  CHECK(M(2, 2) == Elem{4});
  auto supp = vector_support(*E, u);
  REQUIRE(supp.size() == 1);
  CHECK(vector_rank(*E, {E->ring().one(), E->alpha(), E->ring().mul(E->alpha(), E->alpha())}) == 3);
  CHECK(vector_rank(*E, {Elem{0}, Elem{0}}) == 0);
  // the support is generated by the returned elements
  auto span_u = span_of(E->base(), {matrix_representation(*E, u).transpose().row(0), matrix_representation(*E, u).transpose().row(2)});
  auto span_s = span_of(E->base(), {matrix_representation(*E, supp).col(0)});
  CHECK(span_u == span_s);
}

TEST_CASE("rank bound matches free envelopes") {
  auto E = build_extension(IntegerModRing::create(2, 2), 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(0, E->ring().size() - 1);
  for (int t = 0; t < 30; ++t) {
    std::vector<Elem> u{Elem{pick(rng)}, Elem{pick(rng)}};
    auto rows = matrix_representation(*E, u).transpose();
    for (std::size_t r = 1; r <= 2; ++r) {
      bool has = !brute_free_envelopes(rows, r).empty();
      CHECK(has == (vector_rank(*E, u) <= r));
    }
  }
}

TEST_CASE("Plucker coordinates") {
  auto Z8 = IntegerModRing::create(2, 3);
  auto pc = plucker_coordinates(RingMatrix::from_ints(Z8, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(pc.values == elems({1, 0, 0}));
  CHECK(plucker_coordinates(RingMatrix::from_ints(Z8, {{1, 0, 2}})).values == elems({1, 0, 2}));
  CHECK_THROWS_AS(plucker_coordinates(RingMatrix::from_ints(Z8, {{2, 0, 4}})), NotFree);
  auto B = RingMatrix::from_ints(Z8, {{1, 2, 3, 4}, {0, 2, 1, 5}});
  auto Q = RingMatrix::from_ints(Z8, {{3, 1}, {2, 5}});  // det 13 = 5, a unit
  auto p1 = plucker_coordinates(B), p2 = plucker_coordinates(Q * B);
  CHECK(p1.values == p2.values);
  bool unit = false;
  for (Elem v : p1.values) unit = unit || Z8->is_unit(v);
  CHECK(unit);
}

TEST_CASE("skew multiplication and evaluation") {
  auto E = z8_cubic();
  const Ring& S = E->ring();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> pick(0, S.size() - 1);
  auto rand_poly = [&](int deg) {
    std::vector<Elem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Elem{pick(rng)});
    return SkewPoly(E, c);
  };
  SkewPoly X = SkewPoly::monomial(E, S.one(), 1);
  SkewPoly one(E, {S.one()});
  for (int t = 0; t < 20; ++t) {
    Elem a{pick(rng)}, x{pick(rng)};
    CHECK(skew_multiply(X, SkewPoly(E, {a})) == SkewPoly::monomial(E, E->frobenius(a), 1));
    auto f = rand_poly(2), g = rand_poly(2), h = rand_poly(2);
    CHECK(skew_multiply(f, one) == f);
    CHECK(skew_multiply(skew_multiply(f, g), h) == skew_multiply(f, skew_multiply(g, h)));
    CHECK(evaluate(skew_multiply(f, g), x) == evaluate(f, evaluate(g, x)));
    CHECK(evaluate(X, x) == E->frobenius(x));
  }
}

TEST_CASE("annihilators of the worked vector") {
  auto E = z8_cubic();
  std::vector<Elem> u{ext_elem(*E, {2, 0, 6}), Elem{0}, ext_elem(*E, {4, 0, 4})};
  auto all = brute_annihilators(E, u, 1);
  REQUIRE(all.size() == 8);
  for (const auto& f : all) {
    auto w = E->coords(f.coeff(0));
    CHECK((w[0] == Elem{3} || w[0] == Elem{7}));
    CHECK((w[1] == Elem{0} || w[1] == Elem{4}));
    CHECK((w[2] == Elem{3} || w[2] == Elem{7}));
  }
  SkewPoly w3(E, {ext_elem(*E, {3, 0, 3}), E->ring().one()});
  CHECK(evaluate(w3, u) == std::vector<Elem>(3, Elem{0}));
  auto f = annihilator(E, u, 1);
  CHECK(f.is_monic());
  CHECK(f.degree() == 1);
  CHECK(evaluate(f, u) == std::vector<Elem>(3, Elem{0}));
  CHECK(std::find(all.begin(), all.end(), f) != all.end());
  CHECK_THROWS_AS(annihilator(E, {E->ring().one(), E->alpha()}, 1), RankExceeds);
  // u = 0: f = 1 at r = 0, and every X + w at r = 1
  CHECK(annihilator(E, {Elem{0}}, 0) == SkewPoly(E, {E->ring().one()}));
  CHECK(brute_annihilators(E, {Elem{0}}, 1).size() == E->ring().size());
}

TEST_CASE("annihilators of free supports are unique") {
  auto E = build_extension(IntegerModRing::create(2, 2), 2);
  const Ring& S = E->ring();
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint64_t> pick(0, S.size() - 1);
  int free_cases = 0;
  for (int t = 0; t < 40; ++t) {
    std::vector<Elem> u{Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}};
    std::size_t rk = vector_rank(*E, u);
    for (std::size_t r = rk; r <= 2; ++r) {
      auto f = annihilator(E, u, r);
      CHECK(f.is_monic());
      CHECK(f.degree() == static_cast<int>(r));
      CHECK(evaluate(f, u) == std::vector<Elem>(3, Elem{0}));
    }
    auto sd = smith_form(matrix_representation(*E, u));
    bool free = std::all_of(sd.exponents.begin(), sd.exponents.end(), [](unsigned e) { return e == 0; });
    if (free && rk == 2) {
      ++free_cases;
      auto all = brute_annihilators(E, u, 2);
      REQUIRE(all.size() == 1);
      CHECK(all[0] == annihilator(E, u, 2));
    }
  }
  CHECK(free_cases > 0);
  // beyond the extension degree
  std::vector<Elem> u{S.one(), E->alpha()};
  auto f = annihilator(E, u, 3);
  CHECK(f.degree() == 3);
  CHECK(evaluate(f, u) == std::vector<Elem>(2, Elem{0}));
}
