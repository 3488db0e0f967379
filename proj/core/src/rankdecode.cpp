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

#include "chainring/rankdecode.hpp"

#include <algorithm>
#include <set>

#include "chainring/solve.hpp"

namespace chainring {

void RankDecodingInstance::validate() const {
  if (!ext) throw DomainError("rank decoding instance without an extension");
  if (G.empty()) throw DomainError("generator matrix has no rows");
  const std::uint64_t size = ext->ring().size();
  for (const auto& g : G) {
    if (g.size() != y.size()) throw DomainError("generator rows and received word have different lengths");
    for (Elem e : g)
      if (e.code >= size) throw DomainError("generator entry out of range");
  }
  for (Elem e : y)
    if (e.code >= size) throw DomainError("received entry out of range");
}

std::vector<Elem> encode(const RankDecodingInstance& rd, const std::vector<Elem>& x) {
  const Ring& S = rd.ext->ring();
  if (x.size() != rd.k()) throw DomainError("message length differs from the code dimension");
  std::vector<Elem> c(rd.n(), S.zero());
  for (std::size_t i = 0; i < rd.k(); ++i)
    for (std::size_t j = 0; j < rd.n(); ++j) c[j] = S.add(c[j], S.mul(x[i], rd.G[i][j]));
  return c;
}

bool is_decoding(const RankDecodingInstance& rd, const std::vector<Elem>& x) {
  const Ring& S = rd.ext->ring();
  auto c = encode(rd, x);
  std::vector<Elem> e(rd.n());
  for (std::size_t j = 0; j < rd.n(); ++j) e[j] = S.sub(rd.y[j], c[j]);
  return vector_rank(*rd.ext, e) <= rd.r;
}

MinRankInstance to_minrank(const RankDecodingInstance& rd) {
  rd.validate();
  const auto& E = *rd.ext;
  const Ring& S = E.ring();
  MinRankInstance inst{E.base_ptr(), {}, rd.r};
  std::vector<Elem> neg_y;
  for (Elem v : rd.y) neg_y.push_back(S.neg(v));
  inst.matrices.push_back(matrix_representation(E, neg_y));
  for (const auto& g : rd.G) {
    Elem apow = S.one();
    for (unsigned u = 0; u < E.degree(); ++u) {
      std::vector<Elem> row;
      for (Elem e : g) row.push_back(S.mul(apow, e));
      inst.matrices.push_back(matrix_representation(E, row));
      apow = S.mul(apow, E.alpha());
    }
  }
  return inst;
}

std::vector<Elem> combine_coordinates(const RankDecodingInstance& rd, const std::vector<Elem>& xr) {
  const unsigned m = rd.ext->degree();
  if (xr.size() != rd.k() * m) throw DomainError("wrong number of coordinates");
  std::vector<Elem> x;
  for (std::size_t i = 0; i < rd.k(); ++i)
    x.push_back(rd.ext->from_coords(std::vector<Elem>(xr.begin() + static_cast<std::ptrdiff_t>(i * m),
                                                      xr.begin() + static_cast<std::ptrdiff_t>((i + 1) * m))));
  return x;
}

namespace {

std::vector<std::string> x_names(const RankDecodingInstance& rd) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rd.k(); ++i)
    for (unsigned u = 0; u < rd.ext->degree(); ++u)
      names.push_back(rd.k() == 1 ? "x" + std::to_string(u) : "x" + std::to_string(i + 1) + "_" + std::to_string(u));
  return names;
}

// f over S with variables in R, split along the basis 1, alpha, ...
std::vector<MultiPoly> split_over_base(const GaloisExtension& E, const MultiPoly& f, const PolyContextPtr& rctx) {
  std::vector<std::vector<Term>> parts(E.degree());
  for (const auto& t : f.terms()) {
    auto c = E.coords(t.coef);
    for (unsigned v = 0; v < E.degree(); ++v)
      if (c[v].code != 0) parts[v].push_back({c[v], t.exps});
  }
  std::vector<MultiPoly> out;
  for (auto& p : parts) out.push_back(MultiPoly::from_terms(rctx, std::move(p)));
  return out;
}

// (xG - y)_j over the S-context, x_i = sum_u x_{i,u} alpha^u, conjugated by sigma^l.
MultiPoly residual(const RankDecodingInstance& rd, const PolyContextPtr& sctx, std::size_t x0, std::size_t j,
                   std::int64_t l) {
  const auto& E = *rd.ext;
  const Ring& S = E.ring();
  MultiPoly p = MultiPoly::constant(sctx, S.neg(E.frobenius(rd.y[j], l)));
  for (std::size_t i = 0; i < rd.k(); ++i) {
    Elem apow = S.one();
    for (unsigned u = 0; u < E.degree(); ++u) {
      Elem c = E.frobenius(S.mul(apow, rd.G[i][j]), l);
      if (c.code != 0) p = p + MultiPoly::variable(sctx, x0 + i * E.degree() + u).scale(c);
      apow = S.mul(apow, E.alpha());
    }
  }
  return p;
}

std::vector<std::vector<Elem>> verified(const RankDecodingInstance& rd, const std::vector<std::vector<Elem>>& xrs) {
  std::set<std::vector<Elem>> out;
  for (const auto& xr : xrs) {
    auto x = combine_coordinates(rd, xr);
    if (is_decoding(rd, x)) out.insert(x);
  }
  return {out.begin(), out.end()};
}

}  // namespace

ModelSystem sm_rd_model(const RankDecodingInstance& rd, std::size_t unit_subset) {
  rd.validate();
  const auto& E = *rd.ext;
  const std::size_t n = rd.n(), r = rd.r;
  auto Js = subsets_of(n, r);
  if (unit_subset >= Js.size()) throw DomainError("unit subset index out of range");
  std::vector<std::string> names;
  std::vector<std::optional<std::size_t>> zvar(Js.size());
  for (std::size_t t = 0; t < Js.size(); ++t) {
    if (t == unit_subset) continue;
    zvar[t] = names.size();
    std::string s = "z";
    for (std::size_t i = 0; i < Js[t].size(); ++i) s += (i ? "_" : "") + std::to_string(Js[t][i] + 1);
    names.push_back(s);
  }
  const std::size_t x0 = names.size();
  for (auto& s : x_names(rd)) names.push_back(s);
  auto sctx = PolyContext::create(E.ring_ptr(), names);
  auto rctx = PolyContext::create(E.base_ptr(), names);
  ModelSystem out{rctx, {}, {}};
  for (std::size_t v = x0; v < names.size(); ++v) out.x_vars.push_back(v);
  auto z = [&](const std::vector<std::size_t>& J) {
    auto t = static_cast<std::size_t>(std::find(Js.begin(), Js.end(), J) - Js.begin());
    return zvar[t] ? MultiPoly::variable(sctx, *zvar[t]) : MultiPoly::constant(sctx, E.ring().one());
  };
  for (const auto& Jp : subsets_of(n, r + 1)) {
    MultiPoly eq(sctx);
    for (std::size_t s = 0; s <= r; ++s) {
      auto J = Jp;
      J.erase(J.begin() + static_cast<std::ptrdiff_t>(s));
      MultiPoly term = residual(rd, sctx, x0, Jp[s], 0) * z(J);
      eq = s % 2 == 0 ? eq + term : eq - term;
    }
    for (auto& part : split_over_base(E, eq, rctx))
      if (!part.is_zero()) out.equations.push_back(std::move(part));
  }
  return out;
}

KeyEquationSystem key_equation_model(const RankDecodingInstance& rd) {
  rd.validate();
  const auto& E = *rd.ext;
  const Ring& S = E.ring();
  const std::size_t k = rd.k(), n = rd.n(), r = rd.r;
  const unsigned m = E.degree();
  KeyEquationSystem sys;

  // linear form over S
  sys.linear = RingMatrix(E.ring_ptr(), n, (k + 1) * (r + 1));
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t col = 0;
    for (std::size_t l = 0; l < r; ++l) sys.linear(j, col++) = S.neg(E.frobenius(rd.y[j], static_cast<std::int64_t>(l)));
    for (std::size_t l = 0; l <= r; ++l)
      for (std::size_t i = 0; i < k; ++i) sys.linear(j, col++) = E.frobenius(rd.G[i][j], static_cast<std::int64_t>(l));
    sys.linear(j, col) = S.neg(E.frobenius(rd.y[j], static_cast<std::int64_t>(r)));
  }

  // expansion over R
  std::vector<std::string> names;
  for (std::size_t l = 0; l < r; ++l)
    for (unsigned v = 0; v < m; ++v) {
      sys.z_vars.push_back(names.size());
      names.push_back(r == 1 ? "t" + std::to_string(v) : "t" + std::to_string(l) + "_" + std::to_string(v));
    }
  const std::size_t x0 = names.size();
  for (auto& s : x_names(rd)) names.push_back(s);
  auto sctx = PolyContext::create(E.ring_ptr(), names);
  auto rctx = PolyContext::create(E.base_ptr(), names);
  sys.expansion = ModelSystem{rctx, {}, {}};
  for (std::size_t v = x0; v < names.size(); ++v) sys.expansion.x_vars.push_back(v);
  std::vector<MultiPoly> zl;  // z_l as S-polynomials
  for (std::size_t l = 0; l < r; ++l) {
    MultiPoly p(sctx);
    Elem apow = S.one();
    for (unsigned v = 0; v < m; ++v) {
      p = p + MultiPoly::variable(sctx, l * m + v).scale(apow);
      apow = S.mul(apow, E.alpha());
    }
    zl.push_back(p);
  }
  zl.push_back(MultiPoly::constant(sctx, S.one()));
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly eq(sctx);
    for (std::size_t l = 0; l <= r; ++l) eq = eq + zl[l] * residual(rd, sctx, x0, j, static_cast<std::int64_t>(l));
    for (auto& part : split_over_base(E, eq, rctx)) sys.expansion.equations.push_back(std::move(part));
  }

  // coefficient matrices
  const std::size_t nz = sys.z_vars.size(), nx = sys.expansion.x_vars.size(), cols = sys.expansion.equations.size();
  const auto& R = E.base_ptr();
  sys.A = RingMatrix(R, nx * nz, cols);
  sys.B = RingMatrix(R, nx, cols);
  sys.C = RingMatrix(R, nz, cols);
  sys.D = RingMatrix(R, 1, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& t : sys.expansion.equations[c].terms()) {
      std::vector<std::size_t> used;
      for (std::size_t v = 0; v < t.exps.size(); ++v)
        for (std::uint32_t e = 0; e < t.exps[v]; ++e) used.push_back(v);
      if (used.empty()) {
        sys.D(0, c) = t.coef;
      } else if (used.size() == 1 && used[0] >= x0) {
        sys.B(used[0] - x0, c) = t.coef;
      } else if (used.size() == 1) {
        sys.C(used[0], c) = t.coef;
      } else {
        // bilinear z x term; variables are sorted so z comes first
        sys.A((used[1] - x0) * nz + used[0], c) = t.coef;
      }
    }
  // drop zero equations from the polynomial view only
  auto& eqs = sys.expansion.equations;
  eqs.erase(std::remove_if(eqs.begin(), eqs.end(), [](const MultiPoly& f) { return f.is_zero(); }), eqs.end());
  return sys;
}

KeyLinearization solve_key_linearization(const RankDecodingInstance& rd) {
  auto sys = key_equation_model(rd);
  const auto& E = *rd.ext;
  const Ring& S = E.ring();
  const std::size_t k = rd.k(), r = rd.r;
  const std::size_t cols = (k + 1) * (r + 1), top = r * (k + 1);
  KeyLinearization out{hermite_form(sys.linear), {}};
  const auto& T = out.hermite.T;
  auto shape_fail = [] { throw Inconclusive("Hermite form does not have the (I_k | b) block shape"); };
  if (T.rows() < top + k) shape_fail();
  std::vector<Elem> b(k);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t j = 0; j < top; ++j)
      if (T(top + t, j).code != 0) shape_fail();
    for (std::size_t s = 0; s < k; ++s)
      if (T(top + t, top + s) != (s == t ? S.one() : S.zero())) shape_fail();
    b[t] = T(top + t, cols - 1);
  }
  for (std::size_t i = top + k; i < T.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (T(i, j).code != 0) shape_fail();
  for (Elem bt : b) out.x.push_back(S.neg(E.frobenius(bt, -static_cast<std::int64_t>(r))));
  if (!is_decoding(rd, out.x)) throw Inconclusive("linearization answer fails the rank check");
  return out;
}

std::vector<std::vector<Elem>> solve_key_groebner(const RankDecodingInstance& rd, const KeyGroebnerOptions& opts,
                                                  GroebnerBasis* basis) {
  auto sys = key_equation_model(rd);
  const auto& eqs = sys.expansion.equations;
  if (basis) {
    if (eqs.empty()) throw DomainError("key equation expands to the zero system");
    *basis = groebner_basis(eqs, opts.groebner);
  }
  if (eqs.empty()) throw TooLarge("key equation expands to the zero system; every x qualifies");
  SolveOptions so;
  so.field_equations = opts.field_equations;
  so.groebner = opts.groebner;
  return verified(rd, solve_system(eqs, so).project(sys.expansion.x_vars));
}

std::string to_string(DecodeStrategy s) {
  switch (s) {
    case DecodeStrategy::Auto: return "auto";
    case DecodeStrategy::Linearization: return "linearization";
    case DecodeStrategy::SupportMinorsLinearization: return "sm-linearization";
    case DecodeStrategy::SupportMinorsGroebner: return "sm-groebner";
    case DecodeStrategy::Groebner: return "groebner";
    case DecodeStrategy::MinRank: return "minrank";
  }
  return "?";
}

DecodeStrategy parse_decode_strategy(const std::string& s) {
  for (auto v : {DecodeStrategy::Auto, DecodeStrategy::Linearization, DecodeStrategy::SupportMinorsLinearization,
                 DecodeStrategy::SupportMinorsGroebner, DecodeStrategy::Groebner, DecodeStrategy::MinRank})
    if (to_string(v) == s) return v;
  throw DomainError("unknown decoding strategy '" + s + "'");
}

namespace {

std::vector<std::vector<Elem>> run_strategy(const RankDecodingInstance& rd, DecodeStrategy s) {
  switch (s) {
    case DecodeStrategy::Linearization:
      return {solve_key_linearization(rd).x};
    case DecodeStrategy::SupportMinorsLinearization:
      return verified(rd, solve_minrank(to_minrank(rd), MinRankStrategy::SupportMinorsLinearization));
    case DecodeStrategy::SupportMinorsGroebner: {
      SolveOptions so;
      so.field_equations = rd.ext->base().size() <= 512;
      std::vector<std::vector<Elem>> xrs;
      const std::size_t subsets = subsets_of(rd.n(), rd.r).size();
      if (subsets == 0 || rd.r >= rd.n()) return verified(rd, solve_minrank(to_minrank(rd)));
      for (std::size_t t = 0; t < subsets; ++t) {
        auto m = sm_rd_model(rd, t);
        if (m.equations.empty()) continue;
        for (auto& xr : solve_system(m.equations, so).project(m.x_vars)) xrs.push_back(xr);
      }
      return verified(rd, xrs);
    }
    case DecodeStrategy::Groebner:
      return solve_key_groebner(rd);
    case DecodeStrategy::MinRank:
      return verified(rd, solve_minrank(to_minrank(rd), MinRankStrategy::KipnisShamir));
    case DecodeStrategy::Auto:
      break;
  }
  return {};
}

}  // namespace

DecodeResult decode(const RankDecodingInstance& rd, DecodeStrategy strategy) {
  rd.validate();
  std::vector<DecodeStrategy> order;
  if (strategy == DecodeStrategy::Auto)
    order = {DecodeStrategy::Linearization, DecodeStrategy::SupportMinorsLinearization, DecodeStrategy::Groebner,
             DecodeStrategy::MinRank};
  else
    order = {strategy};
  std::string failures;
  for (auto s : order) {
    std::vector<std::vector<Elem>> xs;
    try {
      xs = run_strategy(rd, s);
    } catch (const Inconclusive& e) {
      failures += std::string(failures.empty() ? "" : "; ") + to_string(s) + ": " + e.what();
      continue;
    } catch (const TooLarge& e) {
      failures += std::string(failures.empty() ? "" : "; ") + to_string(s) + ": " + e.what();
      continue;
    } catch (const ResourceExceeded& e) {
      failures += std::string(failures.empty() ? "" : "; ") + to_string(s) + ": " + e.what();
      continue;
    }
    if (xs.empty()) continue;
    DecodeResult res;
    res.strategy_used = s;
    const Ring& S = rd.ext->ring();
    for (auto& x : xs) {
      Decoding d{x, encode(rd, x), {}};
      for (std::size_t j = 0; j < rd.n(); ++j) d.e.push_back(S.sub(rd.y[j], d.c[j]));
      res.solutions.push_back(std::move(d));
    }
    return res;
  }
  throw NoSolution("no codeword within rank distance " + std::to_string(rd.r) +
                   (failures.empty() ? std::string() : " (" + failures + ")"));
}

}  // namespace chainring
