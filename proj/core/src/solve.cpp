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

#include "chainring/solve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "chainring/matrix.hpp"
#include "chainring/upoly.hpp"

namespace chainring {

// ---------------------------------------------------------------- SolutionSet

std::size_t SolutionSet::count() const {
  const std::uint64_t n = ring->size();
  std::size_t total = 0;
  for (const auto& row : rows) {
    std::size_t c = 1;
    for (const auto& cell : row) {
      if (cell) continue;
      if (c > (std::size_t{1} << 62) / n) return SIZE_MAX;
      c *= n;
    }
    total += c;
  }
  return total;
}

std::vector<std::vector<Elem>> SolutionSet::expand(std::size_t limit) const {
  if (count() > limit) throw TooLarge("solution set has more than " + std::to_string(limit) + " tuples");
  std::vector<std::vector<Elem>> out;
  for (const auto& row : rows) {
    std::vector<Elem> cur(row.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == row.size()) {
        out.push_back(cur);
        return;
      }
      if (row[i]) {
        cur[i] = *row[i];
        self(self, i + 1);
        return;
      }
      for (std::uint64_t c = 0; c < ring->size(); ++c) {
        cur[i] = Elem{c};
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  auto less = [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](Elem x, Elem y) { return x.code < y.code; });
  };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Elem>> SolutionSet::project(const std::vector<std::size_t>& vars, std::size_t limit) const {
  std::set<std::vector<Elem>> out;
  for (const auto& row : rows) {
    std::vector<Elem> cur(vars.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == vars.size()) {
        out.insert(cur);
        if (out.size() > limit) throw TooLarge("projection has more than " + std::to_string(limit) + " tuples");
        return;
      }
      if (row[vars[i]]) {
        cur[i] = *row[vars[i]];
        self(self, i + 1);
        return;
      }
      for (std::uint64_t c = 0; c < ring->size(); ++c) {
        cur[i] = Elem{c};
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  return {out.begin(), out.end()};
}

bool SolutionSet::contains(const std::vector<Elem>& point) const {
  for (const auto& row : rows) {
    bool ok = row.size() == point.size();
    for (std::size_t i = 0; ok && i < row.size(); ++i)
      if (row[i] && *row[i] != point[i]) ok = false;
    if (ok) return true;
  }
  return false;
}

namespace {

using Row = std::vector<std::optional<Elem>>;

bool row_less(const Row& a, const Row& b) {
  // free cells sort before fixed ones
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t x = a[i] ? a[i]->code + 1 : 0, y = b[i] ? b[i]->code + 1 : 0;
    if (x != y) return x < y;
  }
  return false;
}

PolyContextPtr context_of(const std::vector<MultiPoly>& F) {
  if (F.empty()) throw DomainError("empty system");
  PolyContextPtr ctx = F.front().context();
  for (const auto& f : F)
    if (f.context() != ctx && (f.nvars() != ctx->nvars() || !f.ring().same_as(ctx->ring())))
      throw DomainError("polynomials live in different rings");
  return ctx;
}

// Every listed tuple must satisfy the original system.
void verify_rows(const std::vector<MultiPoly>& F, const SolutionSet& S) {
  const std::size_t n = S.variables.size();
  for (const auto& row : S.rows) {
    std::vector<MultiPoly> sub;
    for (auto f : F) {
      for (std::size_t v = 0; v < n; ++v)
        if (row[v]) f = f.substitute(v, *row[v]);
      if (!f.is_zero()) sub.push_back(f);
    }
    if (sub.empty()) continue;
    SolutionSet one{S.ring, S.variables, {row}, false, 0, {}};
    if (one.count() > (std::size_t{1} << 16)) continue;  // free cells come from a vanishing ideal
    for (const auto& pt : one.expand())
      for (const auto& f : sub)
        if (!f.ring().is_zero(f.evaluate(pt)))
          throw std::logic_error("solver produced a tuple that does not satisfy the system");
  }
}

std::vector<MultiPoly> with_field_equations(std::vector<MultiPoly> F, const PolyContextPtr& ctx) {
  for (std::size_t v = 0; v < ctx->nvars(); ++v) F.push_back(ring_vanishing_polynomial(ctx, v));
  return F;
}

// ---------------------------------------------------------------- product rings

struct Split {
  std::vector<PolyContextPtr> contexts;
  std::vector<std::vector<MultiPoly>> systems;
};

Split split_system(const ProductRing& P, const PolyContextPtr& ctx, const std::vector<MultiPoly>& F) {
  Split s;
  for (const auto& c : P.components()) s.contexts.push_back(PolyContext::create(c, ctx->vars(), ctx->order()));
  s.systems.resize(s.contexts.size());
  for (const auto& f : F) {
    std::vector<std::vector<Term>> parts(s.contexts.size());
    for (const auto& t : f.terms()) {
      auto cs = P.split(t.coef);
      for (std::size_t i = 0; i < cs.size(); ++i) parts[i].push_back({cs[i], t.exps});
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      s.systems[i].push_back(MultiPoly::from_terms(s.contexts[i], std::move(parts[i])));
  }
  return s;
}

SolutionSet join_solutions(const ProductRing& P, RingPtr ring, std::vector<std::string> vars,
                           const std::vector<SolutionSet>& parts, std::size_t cap) {
  SolutionSet out{std::move(ring), std::move(vars), {}, false, cap, {}};
  for (const auto& p : parts) {
    out.truncated = out.truncated || p.truncated;
    out.diagnostics.insert(out.diagnostics.end(), p.diagnostics.begin(), p.diagnostics.end());
  }
  const std::size_t n = out.variables.size(), m = parts.size();
  std::vector<std::size_t> idx(m, 0);
  for (const auto& p : parts)
    if (p.rows.empty()) return out;
  // odometer over one row per component
  while (true) {
    // cell choices for each variable
    std::vector<std::vector<std::optional<Elem>>> choices(n);
    for (std::size_t v = 0; v < n; ++v) {
      bool all_free = true;
      for (std::size_t c = 0; c < m; ++c)
        if (parts[c].rows[idx[c]][v]) all_free = false;
      if (all_free) {
        choices[v].push_back(std::nullopt);
        continue;
      }
      std::vector<std::vector<Elem>> comp(m);
      for (std::size_t c = 0; c < m; ++c) {
        const auto& cell = parts[c].rows[idx[c]][v];
        if (cell) {
          comp[c].push_back(*cell);
        } else {
          for (std::uint64_t e = 0; e < P.components()[c]->size(); ++e) comp[c].push_back(Elem{e});
        }
      }
      std::vector<std::size_t> k(m, 0);
      std::vector<Elem> tmp(m);
      while (true) {
        for (std::size_t c = 0; c < m; ++c) tmp[c] = comp[c][k[c]];
        choices[v].push_back(P.join(tmp));
        std::size_t c = 0;
        while (c < m && ++k[c] == comp[c].size()) k[c++] = 0;
        if (c == m) break;
      }
    }
    std::vector<std::size_t> k(n, 0);
    while (true) {
      if (out.rows.size() >= cap) {
        out.truncated = true;
        return out;
      }
      Row r(n);
      for (std::size_t v = 0; v < n; ++v) r[v] = choices[v][k[v]];
      out.rows.push_back(std::move(r));
      std::size_t v = 0;
      while (v < n && ++k[v] == choices[v].size()) k[v++] = 0;
      if (v == n) break;
    }
    std::size_t c = 0;
    while (c < m && ++idx[c] == parts[c].rows.size()) idx[c++] = 0;
    if (c == m) break;
  }
  std::sort(out.rows.begin(), out.rows.end(), row_less);
  return out;
}

template <class ChainSolver>
SolutionSet solve_dispatch(const std::vector<MultiPoly>& F, const SolveOptions& opts, ChainSolver&& chain_solver) {
  PolyContextPtr ctx = context_of(F);
  if (const auto* P = dynamic_cast<const ProductRing*>(&ctx->ring())) {
    Split s = split_system(*P, ctx, F);
    std::vector<SolutionSet> parts;
    for (std::size_t i = 0; i < s.systems.size(); ++i) parts.push_back(chain_solver(s.systems[i], s.contexts[i]));
    SolutionSet out = join_solutions(*P, ctx->ring_ptr(), ctx->vars(), parts, opts.max_solutions);
    verify_rows(F, out);
    return out;
  }
  ctx->ring().as_chain();
  SolutionSet out = chain_solver(F, ctx);
  verify_rows(F, out);
  return out;
}

// ---------------------------------------------------------------- univariate lifting

upoly::UPoly to_dense(const MultiPoly& f, std::size_t var) {
  upoly::UPoly d;
  for (const auto& t : f.terms()) {
    std::size_t e = t.exps[var];
    if (d.size() <= e) d.resize(e + 1, Elem{0});
    d[e] = t.coef;
  }
  upoly::trim(d);
  return d;
}

// All roots in R of the nonzero univariate system F.
std::vector<Elem> univariate_roots(const std::vector<MultiPoly>& F, std::size_t var) {
  const ChainRing& R = F.front().ring().as_chain();
  const ChainRing& k = *R.residue_field();
  const unsigned nu = R.nilpotency();
  auto lad = minimal_univariate_basis(F, var);
  std::vector<upoly::UPoly> h, dh;
  for (const auto& g : lad.ladder) {
    h.push_back(to_dense(g, var));
    dh.push_back(upoly::derivative(R, h.back()));
  }
  const auto& gamma = R.teichmuller();
  struct Branch {
    Elem c, c0;
  };
  std::vector<Branch> cur;
  for (Elem c0 : gamma)
    if (R.valuation(upoly::eval(R, h[nu - 1], c0)) >= 1) cur.push_back({c0, c0});
  for (unsigned j = 1; j < nu; ++j) {
    const auto& hj = h[nu - j - 1];
    const auto& dj = dh[nu - j - 1];
    Elem pj = R.p_power(j);
    std::vector<Branch> next;
    for (const auto& b : cur) {
      Elem v = upoly::eval(R, hj, b.c);
      if (R.valuation(v) < j) continue;
      Elem g = R.to_residue(R.divide_by_p_power(v, j));
      Elem d = R.to_residue(upoly::eval(R, dj, b.c0));
      for (Elem z : gamma) {
        Elem lhs = k.add(k.mul(d, R.to_residue(z)), g);
        if (k.is_zero(lhs)) next.push_back({R.add(b.c, R.mul(z, pj)), b.c0});
      }
    }
    cur = std::move(next);
  }
  std::vector<Elem> roots;
  for (const auto& b : cur) roots.push_back(b.c);
  std::sort(roots.begin(), roots.end(), [](Elem a, Elem b) { return a.code < b.code; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------- elimination

struct Eliminator {
  const ChainRing& R;
  PolyContextPtr ctx;
  const SolveOptions& opts;
  std::vector<Row> rows;
  bool truncated = false;

  void run(std::vector<MultiPoly> F, std::vector<std::size_t> remaining, Row partial) {
    if (truncated) return;
    std::erase_if(F, [](const MultiPoly& f) { return f.is_zero(); });
    for (const auto& f : F)
      if (f.is_constant()) return;  // nonzero constant
    if (F.empty() || remaining.empty()) {
      emit(std::move(partial));
      return;
    }
    auto G = groebner_basis(F, opts.groebner).generators;
    for (const auto& g : G)
      if (g.is_constant()) return;
    std::size_t last = remaining.back();
    remaining.pop_back();
    bool used = std::any_of(G.begin(), G.end(), [&](const MultiPoly& g) { return g.uses(last); });
    if (!used) {
      run(std::move(G), std::move(remaining), std::move(partial));
      return;
    }
    std::vector<MultiPoly> elim;
    for (const auto& g : G) {
      auto u = g.used_variables();
      if (u.size() == 1 && u[0] == last) elim.push_back(g);
    }
    std::vector<Elem> cand;
    if (elim.empty()) {
      for (std::uint64_t c = 0; c < R.size(); ++c) cand.push_back(Elem{c});
    } else {
      cand = univariate_roots(elim, last);
    }
    for (Elem c : cand) {
      std::vector<MultiPoly> sub;
      for (const auto& g : G) sub.push_back(g.substitute(last, c));
      Row p = partial;
      p[last] = c;
      run(std::move(sub), remaining, std::move(p));
      if (truncated) return;
    }
  }

  void emit(Row r) {
    if (rows.size() >= opts.max_solutions) {
      truncated = true;
      return;
    }
    rows.push_back(std::move(r));
  }
};

PolyContextPtr lex_context(const PolyContextPtr& ctx) {
  if (ctx->order().kind() == OrderKind::Lex) return ctx;
  return ctx->with_order(MonomialOrder(OrderKind::Lex, ctx->order().precedence()));
}

SolutionSet eliminate_chain(std::vector<MultiPoly> F, const PolyContextPtr& ctx0, const SolveOptions& opts) {
  PolyContextPtr ctx = lex_context(ctx0);
  for (auto& f : F) f = f.with_context(ctx);
  if (opts.field_equations) F = with_field_equations(std::move(F), ctx);
  Eliminator e{ctx->ring().as_chain(), ctx, opts, {}, false};
  e.run(F, ctx->order().precedence(), Row(ctx->nvars()));
  std::sort(e.rows.begin(), e.rows.end(), row_less);
  return {ctx0->ring_ptr(), ctx0->vars(), std::move(e.rows), e.truncated, opts.max_solutions, {}};
}

// ---------------------------------------------------------------- multivariate lifting

SolutionSet lift_chain(std::vector<MultiPoly> F, const PolyContextPtr& ctx, const SolveOptions& opts) {
  const ChainRing& R = ctx->ring().as_chain();
  ChainRingPtr kptr = R.residue_field();
  const ChainRing& k = *kptr;
  const std::size_t n = ctx->nvars();
  const unsigned nu = R.nilpotency();
  const std::size_t branch_cap = std::size_t{1} << 20;
  if (opts.field_equations) F = with_field_equations(std::move(F), ctx);
  std::erase_if(F, [](const MultiPoly& f) { return f.is_zero(); });
  SolutionSet out{ctx->ring_ptr(), ctx->vars(), {}, false, opts.max_solutions, {}};

  const auto& gamma = R.teichmuller();
  std::uint64_t level0 = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (level0 > branch_cap / gamma.size()) throw TooLarge("residue search space exceeds 2^20 points");
    level0 *= gamma.size();
  }
  bool zero_projection = std::all_of(F.begin(), F.end(), [&](const MultiPoly& f) {
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return R.valuation(t.coef) >= 1; });
  });
  if (zero_projection) out.diagnostics.push_back("zero projection: every residue point is a candidate");

  std::vector<std::vector<MultiPoly>> jac(F.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) jac[i].push_back(F[i].derivative(v));

  struct Branch {
    std::vector<Elem> c, c0;
  };
  std::vector<Branch> cur;
  std::vector<std::size_t> idx(n, 0);
  for (std::uint64_t t = 0; t < level0; ++t) {
    std::vector<Elem> pt(n);
    for (std::size_t v = 0; v < n; ++v) pt[v] = gamma[idx[v]];
    bool ok = true;
    for (const auto& f : F)
      if (R.valuation(f.evaluate(pt)) < 1) {
        ok = false;
        break;
      }
    if (ok) cur.push_back({pt, pt});
    for (std::size_t v = 0; v < n && ++idx[v] == gamma.size(); ++v) idx[v] = 0;
  }

  for (unsigned j = 1; j < nu; ++j) {
    Elem pj = R.p_power(j);
    std::vector<Branch> next;
    for (const auto& b : cur) {
      std::vector<Elem> rhs(F.size());
      bool alive = true;
      for (std::size_t i = 0; i < F.size() && alive; ++i) {
        Elem v = F[i].evaluate(b.c);
        if (R.valuation(v) < j) alive = false;
        else rhs[i] = k.neg(R.to_residue(R.divide_by_p_power(v, j)));
      }
      if (!alive) continue;
      std::vector<Elem> z0(n, Elem{0});
      RingMatrix K(kptr, n, 0);
      if (!F.empty()) {
        RingMatrix J(kptr, F.size(), n);
        for (std::size_t i = 0; i < F.size(); ++i)
          for (std::size_t v = 0; v < n; ++v) J(i, v) = R.to_residue(jac[i][v].evaluate(b.c0));
        auto sol = solve_linear(J, rhs);
        if (!sol) continue;
        z0 = *sol;
        K = kernel(J);
      } else {
        K = RingMatrix::identity(kptr, n);
      }
      // z0 + span of the kernel columns
      std::vector<std::uint64_t> coef(K.cols(), 0);
      while (true) {
        std::vector<Elem> z = z0;
        for (std::size_t c = 0; c < K.cols(); ++c)
          for (std::size_t v = 0; v < n; ++v) z[v] = k.add(z[v], k.mul(Elem{coef[c]}, K(v, c)));
        Branch nb = b;
        for (std::size_t v = 0; v < n; ++v)
          nb.c[v] = R.add(nb.c[v], R.mul(R.teichmuller_rep(R.lift_residue(z[v])), pj));
        next.push_back(std::move(nb));
        if (next.size() > branch_cap) throw ResourceExceeded("lifting produced more than 2^20 branches");
        std::size_t c = 0;
        while (c < coef.size() && ++coef[c] == k.size()) coef[c++] = 0;
        if (c == coef.size()) break;
      }
    }
    cur = std::move(next);
  }

  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& b : cur) {
    std::vector<std::uint64_t> key;
    for (Elem e : b.c) key.push_back(e.code);
    if (!seen.insert(key).second) continue;
    if (out.rows.size() >= opts.max_solutions) {
      out.truncated = true;
      break;
    }
    Row r;
    for (Elem e : b.c) r.push_back(e);
    out.rows.push_back(std::move(r));
  }
  std::sort(out.rows.begin(), out.rows.end(), row_less);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- public entry points

SolutionSet solve_univariate(const std::vector<MultiPoly>& F, std::size_t var, const SolveOptions& opts) {
  PolyContextPtr ctx = context_of(F);
  if (var >= ctx->nvars()) throw DomainError("variable index out of range");
  for (const auto& f : F)
    for (std::size_t v : f.used_variables())
      if (v != var) throw DomainError("system is not univariate in " + ctx->vars()[var]);
  auto solve_one = [&](const std::vector<MultiPoly>& G, const PolyContextPtr& c) {
    SolutionSet s{c->ring_ptr(), {c->vars()[var]}, {}, false, opts.max_solutions, {}};
    std::vector<MultiPoly> sys;
    for (const auto& g : G)
      if (!g.is_zero()) sys.push_back(g);
    if (sys.empty()) {
      s.rows.push_back({std::nullopt});
      s.diagnostics.push_back("zero ideal: every ring element is a root");
      return s;
    }
    for (const auto& g : sys)
      if (g.is_constant()) return s;
    for (Elem r : univariate_roots(sys, var)) s.rows.push_back({r});
    return s;
  };
  // project to a one-variable context so verification and splitting see one column
  auto uctx = PolyContext::create(ctx->ring_ptr(), {ctx->vars()[var]});
  std::vector<MultiPoly> U;
  for (const auto& f : F) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) terms.push_back({t.coef, {t.exps[var]}});
    U.push_back(MultiPoly::from_terms(uctx, std::move(terms)));
  }
  var = 0;
  return solve_dispatch(U, opts, solve_one);
}

SolutionSet solve_system(const std::vector<MultiPoly>& F, const SolveOptions& opts) {
  return solve_dispatch(F, opts, [&](const std::vector<MultiPoly>& G, const PolyContextPtr& c) {
    return eliminate_chain(G, c, opts);
  });
}

SolutionSet solve_system_lifting(const std::vector<MultiPoly>& F, const SolveOptions& opts) {
  return solve_dispatch(F, opts, [&](const std::vector<MultiPoly>& G, const PolyContextPtr& c) {
    return lift_chain(G, c, opts);
  });
}

// ---------------------------------------------------------------- vanishing polynomial

namespace {

bool vanishes_everywhere(const ChainRing& R, const upoly::UPoly& f) {
  for (std::uint64_t c = 0; c < R.size(); ++c)
    if (!R.is_zero(upoly::eval(R, f, Elem{c}))) return false;
  return true;
}

std::vector<Elem> compute_vanishing(const ChainRing& R) {
  const std::uint64_t n = R.size();
  RingPtr rp = R.chain_ptr();
  // powers[x][i] = x^i
  std::vector<std::vector<Elem>> powers(n, std::vector<Elem>{R.one()});
  for (std::size_t d = 1;; ++d) {
    for (std::uint64_t x = 0; x < n; ++x) powers[x].push_back(R.mul(powers[x].back(), Elem{x}));
    RingMatrix A(rp, n, d);
    std::vector<Elem> b(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < d; ++i) A(x, i) = powers[x][i];
      b[x] = R.neg(powers[x][d]);
    }
    auto sol = solve_linear(A, b);
    if (!sol) continue;
    const std::uint64_t q = R.residue_size();
    if (d % q == 0) {
      // prod_{j < d/q} (x^q - x - j p)
      upoly::UPoly f{R.one()};
      for (std::uint64_t j = 0; j < d / q; ++j) {
        upoly::UPoly g(q + 1, Elem{0});
        g[q] = R.one();
        g[1] = R.sub(g[1], R.one());
        g[0] = R.neg(R.mul(R.from_int(static_cast<std::int64_t>(j)), R.pi()));
        upoly::trim(g);
        f = upoly::mul(R, f, g);
      }
      if (upoly::degree(f) == static_cast<int>(d) && vanishes_everywhere(R, f)) return f;
    }
    std::vector<Elem> f = *sol;
    f.push_back(R.one());
    return f;
  }
}

}  // namespace

const std::vector<Elem>& vanishing_polynomial(const ChainRing& R) {
  if (R.size() > (std::uint64_t{1} << 16)) throw TooLarge("vanishing polynomial needs |R| <= 2^16");
  static std::mutex mu;
  static std::map<std::string, std::vector<Elem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = R.describe();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_vanishing(R)).first;
  return it->second;
}

MultiPoly ring_vanishing_polynomial(const PolyContextPtr& ctx, std::size_t var) {
  if (var >= ctx->nvars()) throw DomainError("variable index out of range");
  const auto& f = vanishing_polynomial(ctx->ring().as_chain());
  std::vector<Term> terms;
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (f[e].code == 0) continue;
    Exponents ex(ctx->nvars(), 0);
    ex[var] = static_cast<std::uint32_t>(e);
    terms.push_back({f[e], ex});
  }
  return MultiPoly::from_terms(ctx, std::move(terms));
}

}  // namespace chainring
