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

#include "chainring/minrank.hpp"

#include <algorithm>
#include <set>

#include "chainring/extension.hpp"

namespace chainring {

void MinRankInstance::validate() const {
  if (!ring) throw DomainError("MinRank instance without a ring");
  if (matrices.empty()) throw DomainError("MinRank instance needs M_0");
  for (const auto& M : matrices) {
    if (!M.ring().same_as(*ring)) throw DomainError("matrix over " + M.ring().describe() + ", expected " + ring->describe());
    if (M.rows() != rows() || M.cols() != cols()) throw DomainError("MinRank matrices have different shapes");
  }
}

MinRankInstance homogeneous_instance(RingPtr ring, std::vector<RingMatrix> Ms, std::size_t r) {
  if (Ms.empty()) throw DomainError("MinRank instance needs at least one matrix");
  MinRankInstance inst{ring, {RingMatrix(ring, Ms.front().rows(), Ms.front().cols())}, r};
  for (auto& M : Ms) inst.matrices.push_back(std::move(M));
  inst.validate();
  return inst;
}

RingMatrix instance_matrix(const MinRankInstance& inst, const std::vector<Elem>& x) {
  if (x.size() != inst.k()) throw DomainError("wrong number of MinRank coefficients");
  RingMatrix M = inst.matrices[0];
  for (std::size_t l = 0; l < x.size(); ++l) M = M + inst.matrices[l + 1].scale(x[l]);
  return M;
}

MinRankInstance transpose_instance(const MinRankInstance& inst) {
  MinRankInstance t{inst.ring, {}, inst.r};
  for (const auto& M : inst.matrices) t.matrices.push_back(M.transpose());
  return t;
}

namespace {

std::string subset_name(const std::vector<std::size_t>& J) {
  std::string s = "z";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "_" : "") + std::to_string(J[i] + 1);
  return s;
}

// M_x[i][j] as a polynomial in the x variables of ctx.
MultiPoly entry_poly(const MinRankInstance& inst, const PolyContextPtr& ctx, const std::vector<std::size_t>& xv,
                     std::size_t i, std::size_t j) {
  MultiPoly p = MultiPoly::constant(ctx, inst.matrices[0](i, j));
  for (std::size_t l = 0; l < inst.k(); ++l) {
    Elem c = inst.matrices[l + 1](i, j);
    if (c.code != 0) p = p + MultiPoly::variable(ctx, xv[l]).scale(c);
  }
  return p;
}

std::vector<std::size_t> append_x_vars(std::vector<std::string>& names, std::size_t k) {
  std::vector<std::size_t> xv;
  for (std::size_t l = 0; l < k; ++l) {
    xv.push_back(names.size());
    names.push_back("x" + std::to_string(l + 1));
  }
  return xv;
}

}  // namespace

std::vector<std::vector<std::size_t>> ks_schedule(std::size_t n, std::size_t r) {
  auto all = subsets_of(n, r);
  std::vector<std::size_t> last;
  for (std::size_t j = n - r; j < n; ++j) last.push_back(j);
  std::vector<std::vector<std::size_t>> out{last};
  for (const auto& S : all)
    if (S != last) out.push_back(S);
  return out;
}

ModelSystem ks_model(const MinRankInstance& inst, const std::vector<std::size_t>& zprime_rows) {
  inst.validate();
  const std::size_t n = inst.cols(), r = inst.r;
  if (r >= n) throw DomainError("Kipnis-Shamir modeling needs r < n");
  if (zprime_rows.size() != r) throw DomainError("Z' block must have r rows");
  const std::size_t w = n - r;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < r * w; ++v) names.push_back("z" + std::to_string(v + 1));
  auto xv = append_x_vars(names, inst.k());
  auto ctx = PolyContext::create(inst.ring, names);

  // Z as polynomials: identity rows outside the Z' block
  std::vector<std::vector<MultiPoly>> Z(n, std::vector<MultiPoly>(w, MultiPoly(ctx)));
  std::size_t ident = 0;
  for (std::size_t j = 0; j < n; ++j) {
    auto pos = std::find(zprime_rows.begin(), zprime_rows.end(), j);
    if (pos != zprime_rows.end()) {
      auto s = static_cast<std::size_t>(pos - zprime_rows.begin());
      for (std::size_t c = 0; c < w; ++c) Z[j][c] = MultiPoly::variable(ctx, s * w + c);
    } else {
      Z[j][ident++] = MultiPoly::constant(ctx, inst.ring->one());
    }
  }
  ModelSystem out{ctx, {}, xv};
  for (std::size_t i = 0; i < inst.rows(); ++i)
    for (std::size_t c = 0; c < w; ++c) {
      MultiPoly eq(ctx);
      for (std::size_t j = 0; j < n; ++j)
        if (!Z[j][c].is_zero()) eq = eq + entry_poly(inst, ctx, xv, i, j) * Z[j][c];
      if (!eq.is_zero()) out.equations.push_back(std::move(eq));
    }
  return out;
}

ModelSystem sm_model(const MinRankInstance& inst, std::optional<std::size_t> unit_subset) {
  inst.validate();
  const std::size_t n = inst.cols(), r = inst.r;
  auto Js = subsets_of(n, r);
  if (unit_subset && *unit_subset >= Js.size()) throw DomainError("unit subset index out of range");
  std::vector<std::string> names;
  std::vector<std::optional<std::size_t>> zvar(Js.size());
  for (std::size_t t = 0; t < Js.size(); ++t) {
    if (unit_subset && t == *unit_subset) continue;
    zvar[t] = names.size();
    names.push_back(subset_name(Js[t]));
  }
  auto xv = append_x_vars(names, inst.k());
  auto ctx = PolyContext::create(inst.ring, names);
  auto z = [&](const std::vector<std::size_t>& J) {
    auto t = static_cast<std::size_t>(std::find(Js.begin(), Js.end(), J) - Js.begin());
    return zvar[t] ? MultiPoly::variable(ctx, *zvar[t]) : MultiPoly::constant(ctx, inst.ring->one());
  };
  ModelSystem out{ctx, {}, xv};
  for (std::size_t i = 0; i < inst.rows(); ++i)
    for (const auto& Jp : subsets_of(n, r + 1)) {
      MultiPoly eq(ctx);
      for (std::size_t a = 0; a <= r; ++a) {
        auto J = Jp;
        J.erase(J.begin() + static_cast<std::ptrdiff_t>(a));
        MultiPoly term = entry_poly(inst, ctx, xv, i, Jp[a]) * z(J);
        eq = a % 2 == 0 ? eq + term : eq - term;
      }
      if (!eq.is_zero()) out.equations.push_back(std::move(eq));
    }
  return out;
}

SMLinearization sm_linearization(const MinRankInstance& inst, std::size_t unit_subset) {
  inst.validate();
  const Ring& R = *inst.ring;
  const std::size_t n = inst.cols(), r = inst.r, k = inst.k();
  auto Js = subsets_of(n, r);
  if (unit_subset >= Js.size()) throw DomainError("unit subset index out of range");
  const bool affine = !inst.homogeneous();
  const std::size_t block = k + (affine ? 1 : 0);
  std::vector<std::size_t> order;  // block position of each subset
  std::vector<std::size_t> pos(Js.size());
  for (std::size_t t = 0; t < Js.size(); ++t)
    if (t != unit_subset) order.push_back(t);
  order.push_back(unit_subset);
  SMLinearization out;
  out.unit_subset = unit_subset;
  for (std::size_t b = 0; b < order.size(); ++b) {
    pos[order[b]] = b;
    std::string zn = subset_name(Js[order[b]]);
    for (std::size_t l = 0; l < k; ++l) out.columns.push_back("x" + std::to_string(l + 1) + "*" + zn);
    if (affine) out.columns.push_back(zn);
  }
  auto Jps = subsets_of(n, r + 1);
  RingMatrix A(inst.ring, inst.rows() * Jps.size(), Js.size() * block);
  std::size_t row = 0;
  for (std::size_t i = 0; i < inst.rows(); ++i)
    for (const auto& Jp : Jps) {
      for (std::size_t a = 0; a <= r; ++a) {
        auto J = Jp;
        J.erase(J.begin() + static_cast<std::ptrdiff_t>(a));
        auto t = static_cast<std::size_t>(std::find(Js.begin(), Js.end(), J) - Js.begin());
        std::size_t base = pos[t] * block;
        auto put = [&](std::size_t col, Elem c) {
          A(row, col) = a % 2 == 0 ? R.add(A(row, col), c) : R.sub(A(row, col), c);
        };
        for (std::size_t l = 0; l < k; ++l) put(base + l, inst.matrices[l + 1](i, Jp[a]));
        if (affine) put(base + k, inst.matrices[0](i, Jp[a]));
      }
      ++row;
    }
  out.A = A;
  auto H = hermite_form(A);
  std::vector<std::size_t> nz, all_cols(A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) all_cols[j] = j;
  for (std::size_t i = 0; i < H.T.rows(); ++i) {
    auto rw = H.T.row(i);
    if (std::any_of(rw.begin(), rw.end(), [](Elem e) { return e.code != 0; })) nz.push_back(i);
  }
  out.echelon = H.T.select(nz, all_cols);
  // rows living on the unit block: sum c_l x_l z_J + c_0 z_J = 0, z_J a unit
  const std::size_t last = (Js.size() - 1) * block;
  std::vector<std::vector<Elem>> crows;
  std::vector<Elem> d;
  for (std::size_t i = 0; i < out.echelon.rows(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < last && inside; ++j) inside = out.echelon(i, j).code == 0;
    if (!inside) continue;
    std::vector<Elem> c(k);
    for (std::size_t l = 0; l < k; ++l) c[l] = out.echelon(i, last + l);
    crows.push_back(c);
    d.push_back(affine ? R.neg(out.echelon(i, last + k)) : R.zero());
  }
  out.C = crows.empty() ? RingMatrix(inst.ring, 0, k) : RingMatrix::from_elems(inst.ring, crows);
  out.d = d;
  return out;
}

std::string to_string(MinRankStrategy s) {
  switch (s) {
    case MinRankStrategy::KipnisShamir: return "ks";
    case MinRankStrategy::SupportMinorsGroebner: return "sm-groebner";
    case MinRankStrategy::SupportMinorsLinearization: return "sm-linearization";
  }
  return "?";
}

MinRankStrategy parse_minrank_strategy(const std::string& s) {
  if (s == "ks") return MinRankStrategy::KipnisShamir;
  if (s == "sm-groebner") return MinRankStrategy::SupportMinorsGroebner;
  if (s == "sm-linearization") return MinRankStrategy::SupportMinorsLinearization;
  throw DomainError("unknown MinRank strategy '" + s + "'");
}

namespace {

std::vector<std::vector<Elem>> solve_chain(const MinRankInstance& inst, MinRankStrategy strategy,
                                           const MinRankOptions& opts) {
  const Ring& R = *inst.ring;
  SolveOptions so;
  so.field_equations = opts.field_equations.value_or(R.size() <= 512);
  so.groebner = opts.groebner;
  std::set<std::vector<Elem>> found;
  const std::size_t n = inst.cols(), r = inst.r;
  if (r == 0) {
    // M_x = 0 is linear in x
    RingMatrix A(inst.ring, inst.rows() * n, inst.k());
    std::vector<Elem> b;
    for (std::size_t i = 0; i < inst.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < inst.k(); ++l) A(i * n + j, l) = inst.matrices[l + 1](i, j);
        b.push_back(R.neg(inst.matrices[0](i, j)));
      }
    auto sols = all_solutions(A, b, opts.max_candidates);
    std::sort(sols.begin(), sols.end());
    return sols;
  }
  if (r >= std::min(inst.rows(), n)) {
    // every matrix qualifies
    std::vector<std::vector<Elem>> all{{}};
    for (std::size_t l = 0; l < inst.k(); ++l) {
      std::vector<std::vector<Elem>> next;
      for (const auto& v : all)
        for (std::uint64_t c = 0; c < R.size(); ++c) {
          next.push_back(v);
          next.back().push_back(Elem{c});
          if (next.size() > opts.max_candidates) throw TooLarge("every coefficient vector is a solution");
        }
      all = std::move(next);
    }
    return all;
  }
  auto collect = [&](const ModelSystem& m) {
    if (m.equations.empty()) {
      SolutionSet any{m.context->ring_ptr(), m.context->vars(), {std::vector<std::optional<Elem>>(m.context->nvars())}};
      for (auto& x : any.project(m.x_vars, opts.max_candidates)) found.insert(x);
      return;
    }
    for (auto& x : solve_system(m.equations, so).project(m.x_vars, opts.max_candidates)) found.insert(x);
  };
  switch (strategy) {
    case MinRankStrategy::KipnisShamir:
      for (const auto& S : ks_schedule(n, r)) collect(ks_model(inst, S));
      break;
    case MinRankStrategy::SupportMinorsGroebner:
      for (std::size_t t = 0; t < subsets_of(n, r).size(); ++t) collect(sm_model(inst, t));
      break;
    case MinRankStrategy::SupportMinorsLinearization:
      for (std::size_t t = 0; t < subsets_of(n, r).size(); ++t) {
        auto lin = sm_linearization(inst, t);
        try {
          for (auto& x : all_solutions(lin.C, lin.d, opts.max_candidates)) found.insert(x);
        } catch (const TooLarge&) {
          throw Inconclusive("linearized Support-Minors system does not isolate x (unit block " +
                             std::to_string(t) + ")");
        }
      }
      break;
  }
  std::vector<std::vector<Elem>> out;
  for (const auto& x : found)
    if (rank(instance_matrix(inst, x)) <= r) out.push_back(x);
  return out;
}

}  // namespace

std::vector<std::vector<Elem>> solve_minrank(const MinRankInstance& inst, MinRankStrategy strategy,
                                             const MinRankOptions& opts) {
  inst.validate();
  if (inst.ring->is_chain()) return solve_chain(inst, strategy, opts);
  const auto* P = dynamic_cast<const ProductRing*>(inst.ring.get());
  if (!P) throw DomainError("MinRank needs a chain ring or a product of chain rings");
  const std::size_t parts = P->components().size();
  std::vector<MinRankInstance> comps(parts);
  for (std::size_t c = 0; c < parts; ++c) comps[c] = MinRankInstance{P->components()[c], {}, inst.r};
  for (const auto& M : inst.matrices) {
    auto split = M.crt_split();
    for (std::size_t c = 0; c < parts; ++c) comps[c].matrices.push_back(split[c]);
  }
  std::vector<std::vector<std::vector<Elem>>> sols;
  for (const auto& ci : comps) {
    sols.push_back(solve_chain(ci, strategy, opts));
    if (sols.back().empty()) return {};
  }
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> idx(parts, 0);
  while (true) {
    std::vector<Elem> x(inst.k());
    for (std::size_t l = 0; l < inst.k(); ++l) {
      std::vector<Elem> pieces;
      for (std::size_t c = 0; c < parts; ++c) pieces.push_back(sols[c][idx[c]][l]);
      x[l] = P->join(pieces);
    }
    out.push_back(std::move(x));
    if (out.size() > opts.max_candidates) throw TooLarge("too many MinRank solutions");
    std::size_t c = 0;
    while (c < parts && ++idx[c] == sols[c].size()) idx[c++] = 0;
    if (c == parts) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chainring
