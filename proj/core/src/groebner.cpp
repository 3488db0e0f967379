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

#include "chainring/groebner.hpp"

#include <algorithm>
#include <set>

#include "chainring/solve.hpp"

namespace chainring {

MultiPoly s_polynomial(const MultiPoly& g1, const MultiPoly& g2) {
  if (g1.is_zero() || g2.is_zero()) throw ZeroPolynomial("S-polynomial of the zero polynomial");
  if (g1 == g2) throw EqualInputs("S-polynomial of a polynomial with itself");
  const ChainRing& R = g1.ring().as_chain();
  Elem a1 = g1.leading_coefficient(), a2 = g2.leading_coefficient();
  unsigned l1 = R.valuation(a1), l2 = R.valuation(a2);
  unsigned l = std::max(l1, l2);
  Elem c1 = R.mul(R.inverse(R.unit_part(a1)), R.p_power(l - l1));
  Elem c2 = R.mul(R.inverse(R.unit_part(a2)), R.p_power(l - l2));
  Exponents m = monomial_lcm(g1.leading_monomial(), g2.leading_monomial());
  MultiPoly t = g1.mul_term(c1, monomial_quotient(m, g1.leading_monomial()));
  return t.sub_mul_term(c2, monomial_quotient(m, g2.leading_monomial()), g2);
}

MultiPoly a_polynomial(const MultiPoly& g) {
  if (g.is_zero()) throw ZeroPolynomial("A-polynomial of the zero polynomial");
  const ChainRing& R = g.ring().as_chain();
  return g.scale(R.p_power(R.nilpotency() - R.valuation(g.leading_coefficient())));
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Pair {
  std::size_t i;
  std::size_t j;  // kNone for the A-polynomial of i
  Exponents lcm;
  std::size_t serial;
};

class Buchberger {
 public:
  Buchberger(PolyContextPtr ctx, const GroebnerOptions& opts)
      : ctx_(std::move(ctx)), R_(ctx_->ring().as_chain()), opts_(opts) {}

  void add(MultiPoly g) {
    std::size_t idx = G_.size();
    G_.push_back(std::move(g));
    push({idx, kNone, G_[idx].leading_monomial(), serial_++});
    for (std::size_t i = 0; i < idx; ++i)
      push({i, idx, monomial_lcm(G_[i].leading_monomial(), G_[idx].leading_monomial()), serial_++});
  }

  void run() {
    while (!pairs_.empty()) {
      Pair pr = pop();
      if (pr.j != kNone && G_[pr.i] == G_[pr.j]) continue;  // duplicate input, S-polynomial is zero
      if (opts_.use_criteria && pr.j != kNone && skippable(pr)) continue;
      ++pairs_processed_;
      tick();
      MultiPoly s = pr.j == kNone ? a_polynomial(G_[pr.i]) : s_polynomial(G_[pr.i], G_[pr.j]);
      MultiPoly h = head_reduce(std::move(s));
      if (!h.is_zero()) add(std::move(h));
    }
  }

  std::vector<MultiPoly>& basis() { return G_; }
  std::size_t pairs_processed() const { return pairs_processed_; }
  std::size_t steps() const { return steps_; }

 private:
  void tick() {
    if (++steps_ > opts_.max_steps)
      throw ResourceExceeded("Groebner basis computation exceeded " + std::to_string(opts_.max_steps) +
                             " steps (basis size " + std::to_string(G_.size()) + ", pending pairs " +
                             std::to_string(pairs_.size()) + ")");
  }

  void push(Pair p) {
    if (opts_.use_criteria) pending_.insert(key(p.i, p.j));
    pairs_.push_back(std::move(p));
  }

  static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) {
    return j == kNone ? std::make_pair(i, j) : std::make_pair(std::min(i, j), std::max(i, j));
  }

  // Normal strategy: smallest lcm first, oldest pair on ties.
  Pair pop() {
    const auto& ord = ctx_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      int c = ord.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && pairs_[k].serial < pairs_[best].serial)) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    if (opts_.use_criteria) pending_.erase(key(p.i, p.j));
    return p;
  }

  bool skippable(const Pair& pr) const {
    const MultiPoly& a = G_[pr.i];
    const MultiPoly& b = G_[pr.j];
    unsigned va = R_.valuation(a.leading_coefficient()), vb = R_.valuation(b.leading_coefficient());
    // Product criterion for unit leading coefficients and coprime monomials.
    if (va == 0 && vb == 0) {
      bool coprime = true;
      for (std::size_t v = 0; v < pr.lcm.size(); ++v)
        if (a.leading_monomial()[v] != 0 && b.leading_monomial()[v] != 0) coprime = false;
      if (coprime) return true;
    }
    // Chain criterion with strong term divisibility.
    unsigned vmax = std::max(va, vb);
    for (std::size_t k = 0; k < G_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      const MultiPoly& c = G_[k];
      if (!monomial_divides(c.leading_monomial(), pr.lcm)) continue;
      if (R_.valuation(c.leading_coefficient()) > vmax) continue;
      if (pending_.count(key(pr.i, k)) || pending_.count(key(pr.j, k))) continue;
      return true;
    }
    return false;
  }

  MultiPoly head_reduce(MultiPoly h) {
    while (!h.is_zero()) {
      const Term& lt = h.leading_term();
      const MultiPoly* g = nullptr;
      for (const auto& cand : G_)
        if (term_divides(R_, cand.leading_term(), lt)) {
          g = &cand;
          break;
        }
      if (g == nullptr) break;
      tick();
      Elem c = R_.quotient(lt.coef, g->leading_coefficient());
      h = h.sub_mul_term(c, monomial_quotient(lt.exps, g->leading_monomial()), *g);
    }
    return h;
  }

  PolyContextPtr ctx_;
  const ChainRing& R_;
  GroebnerOptions opts_;
  std::vector<MultiPoly> G_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t serial_ = 0;
  std::size_t pairs_processed_ = 0;
  std::size_t steps_ = 0;
};

MultiPoly normalize_leading(const MultiPoly& g) {
  const ChainRing& R = g.ring().as_chain();
  return g.scale(R.inverse(R.unit_part(g.leading_coefficient())));
}

}  // namespace

std::vector<MultiPoly> canonical_basis(std::vector<MultiPoly> G) {
  std::vector<MultiPoly> nz;
  for (auto& g : G)
    if (!g.is_zero()) nz.push_back(normalize_leading(g));
  if (nz.empty()) return nz;
  const ChainRing& R = nz.front().ring().as_chain();
  const auto& ord = nz.front().context()->order();
  auto val = [&](const MultiPoly& g) { return R.valuation(g.leading_coefficient()); };

  std::stable_sort(nz.begin(), nz.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    int c = ord.compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return val(a) < val(b);
  });
  std::vector<MultiPoly> kept;
  for (auto& g : nz) {
    bool redundant = false;
    for (const auto& h : kept)
      if (term_divides(R, h.leading_term(), g.leading_term())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }

  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    const Term& lt = kept[i].leading_term();
    MultiPoly head = MultiPoly::monomial(kept[i].context(), lt.coef, lt.exps);
    MultiPoly tail = kept[i] - head;
    out.push_back(head + strong_reduce(tail, others));
  }
  std::stable_sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    int c = ord.compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c > 0;
    return val(a) < val(b);
  });
  return out;
}

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& F, const GroebnerOptions& opts) {
  if (F.empty()) throw DomainError("empty polynomial system");
  PolyContextPtr ctx = F.front().context();
  ctx->ring().as_chain();
  Buchberger b(ctx, opts);
  for (const auto& f : F)
    if (!f.is_zero()) b.add(f.context() == ctx ? f : f.with_context(ctx));
  b.run();
  GroebnerBasis out;
  out.context = ctx;
  out.generators = canonical_basis(std::move(b.basis()));
  out.pairs_processed = b.pairs_processed();
  out.reduction_steps = b.steps();
  return out;
}

bool is_groebner_basis(const std::vector<MultiPoly>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    if (!strong_reduce(a_polynomial(G[i]), G).is_zero()) return false;
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[j].is_zero() || G[i] == G[j]) continue;
      if (!strong_reduce(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    }
  }
  return true;
}

bool ideal_contains(const GroebnerBasis& G, const MultiPoly& f) {
  return strong_reduce(f.with_context(G.context), G.generators).is_zero();
}

GroebnerBasis elimination_subbasis(const GroebnerBasis& G, std::size_t first_kept) {
  const auto& ord = G.context->order();
  if (ord.kind() != OrderKind::Lex) throw WrongOrder("elimination needs a lex order");
  std::vector<bool> dropped(G.context->nvars(), false);
  for (std::size_t i = 0; i < first_kept && i < ord.precedence().size(); ++i) dropped[ord.precedence()[i]] = true;
  GroebnerBasis out;
  out.context = G.context;
  for (const auto& g : G.generators) {
    bool ok = true;
    for (std::size_t v : g.used_variables())
      if (dropped[v]) ok = false;
    if (ok) out.generators.push_back(g);
  }
  return out;
}

UnivariateLadder minimal_univariate_basis(const std::vector<MultiPoly>& F, std::size_t var) {
  if (F.empty()) throw ZeroIdeal("empty system");
  PolyContextPtr ctx = F.front().context();
  const ChainRing& R = ctx->ring().as_chain();
  std::vector<MultiPoly> sys;
  for (const auto& f : F) {
    for (std::size_t v : f.used_variables())
      if (v != var) throw DomainError("polynomial is not univariate in " + ctx->vars()[var]);
    if (!f.is_zero()) sys.push_back(f);
  }
  if (sys.empty()) throw ZeroIdeal("the zero ideal has no univariate basis");

  auto G = groebner_basis(sys).generators;
  auto min_val = [&](const std::vector<MultiPoly>& B) {
    unsigned v = R.nilpotency();
    for (const auto& g : B) v = std::min(v, R.valuation(g.leading_coefficient()));
    return v;
  };
  if (min_val(G) > 0) {
    // Adding the vanishing polynomial of R leaves the zero set unchanged and
    // puts a monic element into the ideal.
    sys.push_back(ring_vanishing_polynomial(ctx, var));
    G = groebner_basis(sys).generators;
  }
  std::sort(G.begin(), G.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return R.valuation(a.leading_coefficient()) < R.valuation(b.leading_coefficient());
  });

  UnivariateLadder out;
  out.var = var;
  for (const auto& g : G) {
    unsigned a = R.valuation(g.leading_coefficient());
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({R.divide_by_p_power(t.coef, a), t.exps});
    out.exponents.push_back(a);
    out.monic.push_back(MultiPoly::from_terms(ctx, std::move(terms)));
  }
  for (unsigned j = 0; j < R.nilpotency(); ++j) {
    std::size_t i = 0;
    while (i + 1 < out.exponents.size() && out.exponents[i + 1] <= j) ++i;
    out.ladder.push_back(out.monic[i]);
  }
  return out;
}

}  // namespace chainring
