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

// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "chainring/groebner.hpp"
#include "chainring/localring.hpp"
#include "chainring/minrank.hpp"
#include "chainring/oracles.hpp"
#include "chainring/rankdecode.hpp"
#include "chainring/skew.hpp"
#include "chainring/solve.hpp"
#include "support.hpp"

using namespace chainring;
using testsupport::lex;
using testsupport::polys;
using testsupport::strings;

namespace {

// Collects failed expectations for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Tuples = std::vector<std::vector<Elem>>;

Tuples tuples(std::initializer_list<std::vector<std::uint64_t>> list) {
  Tuples out;
  for (const auto& t : list) {
    std::vector<Elem> v;
    for (auto c : t) v.push_back(Elem{c});
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_ideal(const std::vector<MultiPoly>& A, const std::vector<MultiPoly>& B) {
  auto GA = groebner_basis(A).generators, GB = groebner_basis(B).generators;
  for (const auto& f : A)
    if (!strong_reduce(f, GB).is_zero()) return false;
  for (const auto& f : B)
    if (!strong_reduce(f, GA).is_zero()) return false;
  return true;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void groebner_golden(Check& c) {
  auto ctx = lex(integers_mod(8), {"x", "y"});
  auto F = polys(ctx, {"4*x^2*y + y^3 + 2*y + 4", "4*x*y^2"});
  auto G = groebner_basis(F).generators;
  auto printed = polys(ctx, {"4*x^2*y + y^3 + 2*y + 4", "4*x*y^2", "y^4 + 2*y^2 + 4*y", "2*y^3 + 4*y"});
  c.expect(same_ideal(G, printed), "basis does not generate the printed ideal");
  auto s = strings(G);
  c.expect(contains(s, "y^4 + 2*y^2 + 4*y"), "y^4 + 2*y^2 + 4*y missing");
  c.expect(contains(s, "2*y^3 + 4*y"), "2*y^3 + 4*y missing");
  c.expect(is_groebner_basis(G), "output is not a Groebner basis");
}

void field_equation_golden(Check& c) {
  auto R = integers_mod(8);
  auto ctx = PolyContext::create(R, {"x", "y"}, MonomialOrder(OrderKind::Lex, {1, 0}));
  auto F = polys(ctx, {"4*x^2*y + y^3 + 2*y + 4", "4*x*y^2"});
  auto Fm = ring_vanishing_polynomial(ctx, 0);
  c.expect(Fm == testsupport::polys(ctx, {"(x^2 - x)^2 - 2*(x^2 - x)"})[0], "F_m(Z8) differs from (x^2-x)^2 - 2(x^2-x)");
  F.push_back(Fm);
  F.push_back(ring_vanishing_polynomial(ctx, 1));
  auto G = strings(groebner_basis(F).generators);
  auto expected = strings(polys(ctx, {"y^2 + 4", "2*y + 4"}));
  expected.push_back(Fm.to_string());
  c.expect(G == expected, "basis differs from {y^2 + 4, 2*y + 4, F_m(x)}");
  // the oracle's minimal vanishers contain it
  auto search = brute_vanishing_poly(R->as_chain());
  std::vector<Elem> coeffs(search.degree + 1, Elem{0});
  for (const auto& t : Fm.terms()) coeffs[t.exps[0]] = t.coef;
  c.expect(std::find(search.polys.begin(), search.polys.end(), coeffs) != search.polys.end(),
           "F_m is not among the minimal vanishing polynomials found by search");
}

void solver_golden(Check& c) {
  auto c25 = lex(integers_mod(25), {"x"});
  auto z25 = polys(c25, {"x^5 - x", "5*x + 10"});
  c.expect(solve_system(z25).expand() == tuples({{18}}), "equation over Z25 does not give {18}");
  c.expect(brute_solve(z25).expand() == tuples({{18}}), "oracle disagrees on Z25");

  auto c8 = lex(integers_mod(8), {"x", "y"});
  auto z8 = polys(c8, {"4*x^2*y + y^3 + 2*y + 4", "4*x*y^2"});
  Tuples sixteen;
  for (std::uint64_t t = 0; t < 8; ++t) {
    sixteen.push_back({Elem{t}, Elem{2}});
    sixteen.push_back({Elem{t}, Elem{6}});
  }
  std::sort(sixteen.begin(), sixteen.end());
  auto S = solve_system(z8);
  c.expect(S.expand() == sixteen, "system over Z8 does not give the 16 tuples (t,2), (t,6)");
  c.expect(S.count() == 16, "solution count is not 16");
  c.expect(brute_solve(z8).expand() == sixteen, "oracle disagrees on Z8");

  auto L = quotient_local_ring(2, 3, {4, 0, 1}, 1);
  auto cl = lex(L, {"x"});
  auto cubic = polys(cl, {"x^3 + 2*x + 4"});
  std::vector<std::string> roots;
  for (const auto& row : solve_local(cubic).expand()) roots.push_back(L->to_string(row[0]));
  std::sort(roots.begin(), roots.end());
  c.expect(roots == std::vector<std::string>{"2", "2+t", "6", "6+t"}, "local cubic roots differ from {2, 6, 2+t, 6+t}");
  c.expect(brute_solve(cubic).expand().size() == 4, "oracle does not find four local roots");
}

void rank_golden(Check& c) {
  auto R = integers_mod(8);
  auto A = RingMatrix::from_ints(R, {{2, 0}, {0, 4}});
  c.expect(rank(A) == 2, "rk([[2,0],[0,4]]) != 2");
  c.expect(rank(A.scale(R->from_int(6))) == 1, "rk(6A) != 1");
  c.expect(brute_rank(A) == 2 && brute_rank(A.scale(R->from_int(6))) == 1, "subset-search rank disagrees");
  auto E = RingMatrix::from_ints(R, {{2, 0, 4}});
  auto all = brute_free_envelopes(E, 1);
  c.expect(all.size() == 4, "oracle finds " + std::to_string(all.size()) + " free envelopes, not 4");
  std::set<Vec> gens;
  for (const auto& m : all) gens.insert(m.row(0));
  c.expect(gens == std::set<Vec>{Vec{Elem{1}, Elem{0}, Elem{2}}, Vec{Elem{1}, Elem{4}, Elem{2}},
                                 Vec{Elem{1}, Elem{0}, Elem{6}}, Vec{Elem{1}, Elem{4}, Elem{6}}},
           "free envelope generators differ");
}

void minrank_golden(Check& c) {
  auto R = integers_mod(8);
  auto four = homogeneous_instance(R,
                                   {RingMatrix::from_ints(R, {{0, 0, 0, 7}, {1, 0, 0, 5}, {0, 1, 0, 2}, {0, 0, 1, 4}}),
                                    RingMatrix::from_ints(R, {{0, 0, 7, 4}, {0, 0, 5, 3}, {1, 0, 2, 5}, {0, 1, 4, 2}}),
                                    RingMatrix::from_ints(R, {{2, 2, 0, 4}, {4, 2, 0, 6}, {0, 4, 2, 4}, {0, 6, 6, 0}})},
                                   1);
  auto expected = tuples({{0, 0, 0}, {4, 4, 2}, {0, 0, 4}, {4, 4, 6}});
  c.expect(brute_minrank(four) == expected, "brute force differs on the 4x4 instance");
  for (auto s : {MinRankStrategy::KipnisShamir, MinRankStrategy::SupportMinorsGroebner,
                 MinRankStrategy::SupportMinorsLinearization})
    c.expect(solve_minrank(four, s) == expected, to_string(s) + " differs on the 4x4 instance");

  MinRankInstance three{R,
                        {RingMatrix::from_ints(R, {{5, 2, 3}, {5, 1, 4}, {4, 3, 6}}),
                         RingMatrix::from_ints(R, {{1, 2, 0}, {0, 1, 3}, {0, 2, 1}}),
                         RingMatrix::from_ints(R, {{0, 2, 1}, {1, 0, 3}, {0, 5, 5}}),
                         RingMatrix::from_ints(R, {{0, 5, 5}, {0, 1, 0}, {1, 2, 5}})},
                        1};
  auto one = tuples({{1, 3, 6}});
  c.expect(brute_minrank(three) == one, "brute force differs on the 3x3 instance");
  for (auto s : {MinRankStrategy::KipnisShamir, MinRankStrategy::SupportMinorsGroebner,
                 MinRankStrategy::SupportMinorsLinearization})
    c.expect(solve_minrank(three, s) == one, to_string(s) + " differs on the 3x3 instance");

  auto lin = sm_linearization(four, 3);
  std::vector<std::vector<std::int64_t>> printed(12, std::vector<std::int64_t>(12, 0));
  for (int i = 0; i < 11; ++i) {
    printed[i][i] = (i % 3 == 2) ? 2 : 1;
    printed[i][11] = 2;
  }
  printed[11][11] = 4;
  c.expect(lin.echelon == RingMatrix::from_ints(R, printed), "linearized echelon matrix differs from the printed 12x12");
}

Elem ext_elem(const GaloisExtension& E, std::vector<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(E.base().from_int(x));
  v.resize(E.degree(), Elem{0});
  return E.from_coords(v);
}

void extension_golden(Check& c) {
  auto E = build_extension(IntegerModRing::create(2, 3), 3);
  auto el = [](std::initializer_list<std::uint64_t> l) {
    std::vector<Elem> v;
    for (auto x : l) v.push_back(Elem{x});
    return v;
  };
  c.expect(E->residue_modulus() == el({1, 1, 0, 1}), "residue modulus is not X^3 + X + 1");
  c.expect(E->modulus() == el({7, 5, 6, 1}), "modulus is not X^3 + 6X^2 + 5X + 7");
  const Ring& S = E->ring();
  c.expect(S.pow(E->alpha(), 7) == S.one(), "alpha^7 != 1");
  for (std::uint64_t i = 1; i < 7; ++i) c.expect(S.pow(E->alpha(), i) != S.one(), "alpha has order below 7");
}

void rank_decoding_golden(Check& c) {
  auto E = build_extension(IntegerModRing::create(2, 3), 3);
  RankDecodingInstance rd;
  rd.ext = E;
  rd.G = {{ext_elem(*E, {1}), ext_elem(*E, {2, 1, 2}), ext_elem(*E, {0, 3, 1})}};
  rd.y = {ext_elem(*E, {3, 3, 4}), ext_elem(*E, {6, 7, 5}), ext_elem(*E, {5, 4, 2})};
  rd.r = 1;
  Elem x = ext_elem(*E, {1, 3, 6});
  auto c_expected = encode(rd, {x});

  auto mr = solve_minrank(to_minrank(rd));
  c.expect(mr.size() == 1 && combine_coordinates(rd, mr[0]) == std::vector<Elem>{x}, "MinRank reduction misses x");

  auto lin = solve_key_linearization(rd);
  const auto& T = lin.hermite.T;
  c.expect(T(0, 3) == ext_elem(*E, {4, 0, 2}) && T(1, 3) == ext_elem(*E, {0, 4, 6}) && T(2, 3) == ext_elem(*E, {3, 6, 3}),
           "Hermite last column differs from (2a^2+4, 6a^2+4a, 3a^2+6a+3)");
  c.expect(lin.x == std::vector<Elem>{x}, "linearization misses x");

  GroebnerBasis gb;
  auto xs = solve_key_groebner(rd, {}, &gb);
  auto got = strings(gb.generators);
  auto want = strings(polys(gb.context, {"x0+7", "x1+5", "x2+2", "2*t0+2", "2*t1", "2*t2+2"}));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  c.expect(got == want, "Groebner basis differs from {x0+7, x1+5, x2+2, 2t0+2, 2t1, 2t2+2}");
  c.expect(xs == Tuples{{x}}, "Groebner expansion misses x");

  auto res = decode(rd);
  c.expect(res.solutions.size() == 1 && res.solutions[0].c == c_expected, "decode does not return c = x g");

  std::vector<Elem> u{ext_elem(*E, {2, 0, 6}), ext_elem(*E, {0}), ext_elem(*E, {4, 0, 4})};
  auto ann = brute_annihilators(E, u, 1);
  std::set<std::vector<Elem>> found, expected;
  for (const auto& f : ann) found.insert(E->coords(f.coeff(0)));
  for (std::int64_t w0 : {3, 7})
    for (std::int64_t w1 : {0, 4})
      for (std::int64_t w2 : {3, 7}) expected.insert(E->coords(ext_elem(*E, {w0, w1, w2})));
  c.expect(ann.size() == 8 && found == expected, "annihilators of u differ from the eight X + w");
  auto f = annihilator(E, u, 1);
  c.expect(found.count(E->coords(f.coeff(0))) == 1, "constructed annihilator is not among the eight");
}

void property_suites(Check& c) {
  std::mt19937_64 rng(2026);
  int systems = 0;
  for (auto R : {integers_mod(4), integers_mod(8), integers_mod(9)}) {
    for (int i = 0; i < 40; ++i) {
      auto ctx = lex(R, i % 4 == 0 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"});
      std::vector<MultiPoly> F;
      for (int j = 0; j < 2; ++j) F.push_back(testsupport::random_poly(ctx, rng, 3, 3));
      auto brute = brute_solve(F).expand();
      c.expect(solve_system(F).expand() == brute, "solve_system differs from enumeration: " + strings(F)[0]);
      c.expect(solve_system_lifting(F).expand() == brute, "lifting differs from enumeration: " + strings(F)[0]);
      ++systems;
    }
  }
  c.expect(systems >= 100, "fewer than 100 random systems");

  auto R8 = integers_mod(8);
  std::uniform_int_distribution<std::int64_t> pick8(0, 7);
  auto random_matrix = [&] {
    std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(3));
    for (auto& r : rows)
      for (auto& e : r) e = pick8(rng);
    return RingMatrix::from_ints(R8, rows);
  };
  for (int i = 0; i < 200; ++i) {
    auto A = random_matrix(), B = random_matrix(), C = random_matrix();
    c.expect(rank(A - A) == 0, "d(A, A) != 0");
    c.expect(A == B || rank(A - B) > 0, "d(A, B) = 0 for A != B");
    c.expect(rank(A - B) == rank(B - A), "rank distance is not symmetric");
    c.expect(rank(A - C) <= rank(A - B) + rank(B - C), "triangle inequality fails");
  }

  // planted rank-1 errors over the Z4 extension of degree 2
  auto E = build_extension(IntegerModRing::create(2, 2), 2);
  const Ring& S = E->ring();
  std::uniform_int_distribution<std::uint64_t> pickS(0, S.size() - 1), pickR(0, 3);
  int both = 0;
  for (int t = 0; t < 20; ++t) {
    RankDecodingInstance rd;
    rd.ext = E;
    rd.r = 1;
    std::vector<Elem> g(5), a(5);
    for (auto& e : g) e = Elem{pickS(rng)};
    g[0] = S.one();
    // free row: some coordinate is a unit
    do
      for (auto& e : a) e = Elem{pickR(rng)};
    while (std::none_of(a.begin(), a.end(), [](Elem e) { return e.code % 2 == 1; }));
    Elem b{pickS(rng)}, x{pickS(rng)};
    rd.G = {g};
    for (std::size_t j = 0; j < 5; ++j) rd.y.push_back(S.add(S.mul(x, g[j]), S.mul(b, E->embed(a[j]))));
    auto gb = solve_key_groebner(rd);
    c.expect(std::find(gb.begin(), gb.end(), std::vector<Elem>{x}) != gb.end(), "Groebner decoder misses the planted x");
    for (const auto& s : gb) c.expect(is_decoding(rd, s), "Groebner decoder returns a non-decoding x");
    try {
      auto lin = solve_key_linearization(rd);
      ++both;
      c.expect(std::find(gb.begin(), gb.end(), lin.x) != gb.end(), "linearization and Groebner disagree");
    } catch (const Inconclusive&) {
    }
  }
  c.expect(both > 0, "linearization never succeeded");
}

void negative_golden(Check& c) {
  auto Z6 = RingMatrix::from_ints(integers_mod(6), {{2}, {3}});
  bool raised = false;
  try {
    standard_form(Z6);
  } catch (const NotChainRing&) {
    raised = true;
  }
  c.expect(raised, "standard_form over Z6 did not raise NotChainRing");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Groebner basis over Z8 (lex x > y)", groebner_golden},
      {"field equations over Z8 (lex y > x)", field_equation_golden},
      {"solver goldens over Z25, Z8 and Z8[X]/(X^2+4, 2X)", solver_golden},
      {"rank and free envelope goldens over Z8", rank_golden},
      {"MinRank goldens (4x4 homogeneous, 3x3 affine, linearized echelon)", minrank_golden},
      {"degree-3 Galois extension of Z8", extension_golden},
      {"rank decoding goldens and annihilators", rank_decoding_golden},
      {"property suites against oracles", property_suites},
      {"standard form over Z6 raises NotChainRing", negative_golden}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << i + 1 << ": " << (c.failures.empty() ? "PASS" : "FAIL") << "  " << criteria[i].first;
    line.precision(2);
    line << std::fixed << " (" << secs << " s)";
    if (!c.failures.empty()) {
      ++failed;
      line << "; " << c.failures.size() << " failed check(s), first: " << c.failures.front();
    }
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
