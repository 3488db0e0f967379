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
#include <set>

#include "chainring/oracles.hpp"
#include "chainring/rankdecode.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chainring;

namespace {

Elem ext_elem(const GaloisExtension& E, std::vector<std::int64_t> c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(E.base().from_int(x));
  v.resize(E.degree(), Elem{0});
  return E.from_coords(v);
}

// Length-3 code over the cubic extension of Z/8 with a rank-1 error.
RankDecodingInstance worked_instance() {
  auto E = build_extension(IntegerModRing::create(2, 3), 3);
  RankDecodingInstance rd;
  rd.ext = E;
  rd.G = {{ext_elem(*E, {1}), ext_elem(*E, {2, 1, 2}), ext_elem(*E, {0, 3, 1})}};
  rd.y = {ext_elem(*E, {3, 3, 4}), ext_elem(*E, {6, 7, 5}), ext_elem(*E, {5, 4, 2})};
  rd.r = 1;
  return rd;
}

std::vector<std::vector<Elem>> all_decodings(const RankDecodingInstance& rd) {
  // k = 1 only
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t c = 0; c < rd.ext->ring().size(); ++c)
    if (is_decoding(rd, {Elem{c}})) out.push_back({Elem{c}});
  return out;
}

RingMatrix random_matrix(const RingPtr& R, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, R->size() - 1);
  RingMatrix M(R, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = Elem{pick(rng)};
  return M;
}

// Random k = 1 instance over E with error b * A, row(A) free of rank r.
RankDecodingInstance planted(const ExtensionPtr& E, std::size_t n, std::size_t r, std::mt19937_64& rng,
                             std::vector<Elem>* x_out) {
  const Ring& S = E->ring();
  const auto& R = E->base_ptr();
  std::uniform_int_distribution<std::uint64_t> pickS(0, S.size() - 1);
  RankDecodingInstance rd;
  rd.ext = E;
  rd.r = r;
  std::vector<Elem> g(n);
  for (auto& e : g) e = Elem{pickS(rng)};
  g[0] = S.one();
  rd.G = {g};
  RingMatrix A(R, r, n);
  for (bool free = false; !free;) {
    A = random_matrix(R, r, n, rng);
    try {
      plucker_coordinates(A);
      free = true;
    } catch (const NotFree&) {
    }
  }
  std::vector<Elem> b(r);
  for (auto& e : b) e = Elem{pickS(rng)};
  Elem x{pickS(rng)};
  rd.y.assign(n, S.zero());
  for (std::size_t j = 0; j < n; ++j) {
    Elem e = S.zero();
    for (std::size_t l = 0; l < r; ++l) e = S.add(e, S.mul(b[l], E->embed(A(l, j))));
    rd.y[j] = S.add(S.mul(x, g[j]), e);
  }
  *x_out = {x};
  return rd;
}

}  // namespace

TEST_CASE("reduction to MinRank reproduces the affine Z/8 instance") {
  auto rd = worked_instance();
  auto inst = to_minrank(rd);
  auto R = integers_mod(8);
  std::vector<RingMatrix> expected{RingMatrix::from_ints(R, {{5, 2, 3}, {5, 1, 4}, {4, 3, 6}}),
                                   RingMatrix::from_ints(R, {{1, 2, 0}, {0, 1, 3}, {0, 2, 1}}),
                                   RingMatrix::from_ints(R, {{0, 2, 1}, {1, 0, 3}, {0, 5, 5}}),
                                   RingMatrix::from_ints(R, {{0, 5, 5}, {0, 1, 0}, {1, 2, 5}})};
  REQUIRE(inst.matrices.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(inst.matrices[i] == expected[i]);
  auto sols = solve_minrank(inst);
  REQUIRE(sols.size() == 1);
  auto x = combine_coordinates(rd, sols[0]);
  CHECK(x[0] == ext_elem(*rd.ext, {1, 3, 6}));
  auto res = decode(rd, DecodeStrategy::MinRank);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0].c == encode(rd, {ext_elem(*rd.ext, {1, 3, 6})}));
  CHECK(vector_rank(*rd.ext, res.solutions[0].e) <= 1);
}

TEST_CASE("key equation linearization") {
  auto rd = worked_instance();
  const auto& E = *rd.ext;
  auto sys = key_equation_model(rd);
  REQUIRE(sys.linear.rows() == 3);
  REQUIRE(sys.linear.cols() == 4);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(sys.linear(j, 0) == E.ring().neg(rd.y[j]));
    CHECK(sys.linear(j, 1) == rd.G[0][j]);
    CHECK(sys.linear(j, 2) == E.frobenius(rd.G[0][j]));
    CHECK(sys.linear(j, 3) == E.ring().neg(E.frobenius(rd.y[j])));
  }
  auto lin = solve_key_linearization(rd);
  const auto& T = lin.hermite.T;
  CHECK(T(0, 3) == ext_elem(E, {4, 0, 2}));
  CHECK(T(1, 3) == ext_elem(E, {0, 4, 6}));
  CHECK(T(2, 3) == ext_elem(E, {3, 6, 3}));
  CHECK(T(0, 0) == E.ring().one());
  CHECK(T(0, 1) == ext_elem(E, {0, 1, 1}));
  CHECK(T(1, 1) == ext_elem(E, {2}));
  CHECK(T(2, 2) == E.ring().one());
  REQUIRE(lin.x.size() == 1);
  CHECK(lin.x[0] == ext_elem(E, {1, 3, 6}));
  CHECK(decode(rd).strategy_used == DecodeStrategy::Linearization);
}

TEST_CASE("key equation expansion and Groebner basis") {
  auto rd = worked_instance();
  auto sys = key_equation_model(rd);
  auto ctx = sys.expansion.context;
  CHECK(ctx->vars() == std::vector<std::string>{"t0", "t1", "t2", "x0", "x1", "x2"});
  auto printed = testsupport::polys(
      ctx, {"x0*t0+x2*t1+x1*t2+2*x2*t2+x0+2*x2+5*t0+4*t1+5*t2+5",
            "x1*t0+x0*t1+3*x2*t1+3*x1*t2-x2*t2-x2+5*t0+t1+3*t2+4",
            "x2*t0+x1*t1+2*x2*t1+x0*t2+2*x1*t2-x2*t2+x1-x2+4*t0+5*t1+3*t2+1",
            "2*x0*t0+2*x1*t0+5*x2*t0+2*x0*t1+5*x1*t1+2*x2*t1+5*x0*t2+2*x1*t2+5*x2*t2+6*x0+4*x1+x2+2*t0+3*t1-t2",
            "x0*t0+x2*t0+x1*t1+3*x2*t1+x0*t2+3*x1*t2+x2*t2+6*x0+3*x1+6*x2+t0+3*t1+5",
            "2*x0*t0+5*x1*t0+2*x2*t0+5*x0*t1+2*x1*t1+5*x2*t1+2*x0*t2+5*x1*t2+5*x2*t2-x0+3*x1-x2+3*t0-t1+t2+6",
            "x1*t0+5*x2*t0+x0*t1+5*x1*t1+5*x2*t1+5*x0*t2+5*x1*t2+2*x2*t2+2*x0+3*x1-x2+3*t0+6*t1+7",
            "3*x0*t0+3*x1*t0+3*x0*t1+4*x2*t1+4*x1*t2+3*x2*t2-x0+3*x1+3*x2+4*t0+5*t1+6*t2+2",
            "x0*t0+5*x1*t0+5*x2*t0+5*x0*t1+5*x1*t1+2*x2*t1+5*x0*t2+2*x1*t2+2*x0+6*x1+3*x2+6*t0+5*t2+6"});
  CHECK(testsupport::strings(sys.expansion.equations) == testsupport::strings(printed));

  GroebnerBasis gb;
  auto xs = solve_key_groebner(rd, {}, &gb);
  auto golden = testsupport::polys(ctx, {"x0+7", "x1+5", "x2+2", "2*t0+2", "2*t1", "2*t2+2"});
  auto got = testsupport::strings(gb.generators);
  auto want = testsupport::strings(golden);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  REQUIRE(xs.size() == 1);
  CHECK(xs[0][0] == ext_elem(*rd.ext, {1, 3, 6}));
}

TEST_CASE("expansion matrices re-evaluate to the key equation") {
  std::mt19937_64 rng(17);
  for (auto rd : {worked_instance()}) {
    auto sys = key_equation_model(rd);
    const auto& E = *rd.ext;
    const Ring& S = E.ring();
    const Ring& R = E.base();
    const unsigned m = E.degree();
    std::uniform_int_distribution<std::uint64_t> pickR(0, R.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> xt(rd.k() * m), zt(rd.r * m);
      for (auto& e : xt) e = Elem{pickR(rng)};
      for (auto& e : zt) e = Elem{pickR(rng)};
      auto x = combine_coordinates(rd, xt);
      std::vector<Elem> z;
      for (std::size_t l = 0; l < rd.r; ++l)
        z.push_back(E.from_coords(std::vector<Elem>(zt.begin() + static_cast<std::ptrdiff_t>(l * m),
                                                    zt.begin() + static_cast<std::ptrdiff_t>((l + 1) * m))));
      z.push_back(S.one());
      auto c = encode(rd, x);
      for (std::size_t j = 0; j < rd.n(); ++j) {
        Elem lhs = S.zero();
        for (std::size_t l = 0; l <= rd.r; ++l)
          lhs = S.add(lhs, S.mul(z[l], E.frobenius(S.sub(c[j], rd.y[j]), static_cast<std::int64_t>(l))));
        auto coords = E.coords(lhs);
        for (unsigned v = 0; v < m; ++v) {
          std::size_t col = j * m + v;
          Elem acc = sys.D(0, col);
          for (std::size_t a = 0; a < xt.size(); ++a) {
            acc = R.add(acc, R.mul(xt[a], sys.B(a, col)));
            for (std::size_t b = 0; b < zt.size(); ++b)
              acc = R.add(acc, R.mul(R.mul(xt[a], zt[b]), sys.A(a * zt.size() + b, col)));
          }
          for (std::size_t b = 0; b < zt.size(); ++b) acc = R.add(acc, R.mul(zt[b], sys.C(b, col)));
          CHECK(acc == coords[v]);
        }
      }
    }
  }
}

TEST_CASE("Support-Minors model for rank decoding") {
  auto rd = worked_instance();
  auto model = sm_rd_model(rd, 0);
  auto ctx = model.context;
  CHECK(ctx->vars() == std::vector<std::string>{"z2", "z3", "x0", "x1", "x2"});
  // printed with the opposite overall sign convention
  auto printed = testsupport::polys(
      ctx, {"-z2*x0+3*z2+2*x0+2*x1+5*x2+2", "-z2*x1+3*z2+x0+x2+1", "-z2*x2+4*z2+2*x0+5*x1+2*x2+3",
            "-z3*x0+3*z3+x1+5*x2+3", "-z3*x1+3*z3+3*x0+3*x1+4", "-z3*x2+4*z3+x0+5*x1+5*x2+6",
            "z2*x1+5*z2*x2+3*z2+6*z3*x0+6*z3*x1+3*z3*x2+6*z3", "3*z2*x0+3*z2*x1+4*z2-z3*x0-z3*x2-z3",
            "z2*x0+5*z2*x1+5*z2*x2+6*z2+6*z3*x0+3*z3*x1+6*z3*x2+5*z3"});
  REQUIRE(model.equations.size() == printed.size());
  for (std::size_t i = 0; i < printed.size(); ++i) CHECK(model.equations[i] == -printed[i]);

  SolveOptions so;
  so.field_equations = true;
  auto sols = solve_system(model.equations, so).project(model.x_vars);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == std::vector<Elem>{Elem{1}, Elem{3}, Elem{6}});
  auto res = decode(rd, DecodeStrategy::SupportMinorsGroebner);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0].x[0] == ext_elem(*rd.ext, {1, 3, 6}));

  auto full = rd;
  full.r = 3;
  CHECK(sm_rd_model(full).equations.empty());
}

TEST_CASE("error-free words") {
  auto rd = worked_instance();
  const auto& E = *rd.ext;
  Elem x = ext_elem(E, {2, 5, 1});
  rd.y = encode(rd, {x});
  rd.r = 0;
  auto lin = solve_key_linearization(rd);
  CHECK(lin.x == std::vector<Elem>{x});
  auto res = decode(rd);
  REQUIRE(res.solutions.size() == 1);
  for (Elem e : res.solutions[0].e) CHECK(e.code == 0);
  auto gb = solve_key_groebner(rd);
  CHECK(gb == std::vector<std::vector<Elem>>{{x}});
  auto inst = to_minrank(rd);
  auto mr = solve_minrank(inst);
  REQUIRE(mr.size() == 1);
  CHECK(combine_coordinates(rd, mr[0])[0] == x);

  rd.y[1] = E.ring().add(rd.y[1], E.ring().one());
  CHECK_THROWS_AS(decode(rd), NoSolution);
}

TEST_CASE("every model describes the decodable set on a tiny extension") {
  auto E = build_extension(IntegerModRing::create(2, 2), 2);
  const Ring& S = E->ring();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(0, S.size() - 1);
  int nonempty = 0;
  for (int trial = 0; trial < 12; ++trial) {
    RankDecodingInstance rd;
    rd.ext = E;
    rd.r = 1;
    rd.G = {{S.one(), Elem{pick(rng)}, Elem{pick(rng)}}};
    rd.y = {Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}};
    auto expected = all_decodings(rd);
    if (!expected.empty()) ++nonempty;

    // key equation: x decodes iff some z_0 solves it
    std::vector<std::vector<Elem>> by_key;
    for (std::uint64_t xc = 0; xc < S.size(); ++xc) {
      auto c = encode(rd, {Elem{xc}});
      bool found = false;
      for (std::uint64_t zc = 0; zc < S.size() && !found; ++zc) {
        bool ok = true;
        for (std::size_t j = 0; j < rd.n() && ok; ++j) {
          Elem d = S.sub(c[j], rd.y[j]);
          ok = S.is_zero(S.add(S.mul(Elem{zc}, d), E->frobenius(d)));
        }
        found = ok;
      }
      if (found) by_key.push_back({Elem{xc}});
    }
    CHECK(by_key == expected);

    // MinRank reduction is a bijection
    std::vector<std::vector<Elem>> by_minrank;
    for (const auto& xr : brute_minrank(to_minrank(rd))) by_minrank.push_back(combine_coordinates(rd, xr));
    std::sort(by_minrank.begin(), by_minrank.end());
    CHECK(by_minrank == expected);

    // Support-Minors over all unit positions
    std::set<std::vector<Elem>> by_sm;
    for (std::size_t t = 0; t < 3; ++t) {
      auto model = sm_rd_model(rd, t);
      for (const auto& xr : brute_solve(model.equations).project(model.x_vars))
        by_sm.insert(combine_coordinates(rd, xr));
    }
    CHECK(std::vector<std::vector<Elem>>(by_sm.begin(), by_sm.end()) == expected);

    if (expected.empty()) {
      CHECK_THROWS_AS(decode(rd), NoSolution);
    } else {
      CHECK(solve_key_groebner(rd) == expected);
      std::vector<std::vector<Elem>> got;
      for (const auto& d : decode(rd, DecodeStrategy::MinRank).solutions) got.push_back(d.x);
      CHECK(got == expected);
    }
  }
  CHECK(nonempty > 0);
}

TEST_CASE("planted rank-1 errors: linearization and Groebner agree") {
  auto E = build_extension(IntegerModRing::create(2, 2), 2);
  std::mt19937_64 rng(2026);
  int linear_ok = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Elem> x;
    auto rd = planted(E, 5, 1, rng, &x);
    auto expected = all_decodings(rd);
    CHECK(std::find(expected.begin(), expected.end(), x) != expected.end());
    auto gb = solve_key_groebner(rd);
    CHECK(gb == expected);
    try {
      auto lin = solve_key_linearization(rd);
      ++linear_ok;
      CHECK(std::find(gb.begin(), gb.end(), lin.x) != gb.end());
      if (expected.size() == 1) CHECK(lin.x == x);
    } catch (const Inconclusive&) {
    }
    auto res = decode(rd);
    for (const auto& d : res.solutions) CHECK(is_decoding(rd, d.x));
  }
  MESSAGE("linearization succeeded on " << linear_ok << " of 20 planted instances");
}
