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

#include "chainring/localring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chainring/groebner.hpp"

namespace chainring {

namespace {

using Coords = std::vector<Elem>;

void fail(const std::string& msg) { throw NotARing("invalid local ring presentation: " + msg); }

Coords reduce(const LocalRingPresentation& p, Coords u) {
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = p.base->reduce_mod_p_power(u[j], p.ann[j]);
  return u;
}

Coords mul_raw(const LocalRingPresentation& p, const Coords& a, const Coords& b) {
  const ChainRing& R = *p.base;
  const std::size_t g = p.ann.size();
  Coords out(g, R.zero());
  for (std::size_t i = 0; i < g; ++i) {
    if (R.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < g; ++j) {
      if (R.is_zero(b[j])) continue;
      Elem ab = R.mul(a[i], b[j]);
      for (std::size_t s = 0; s < g; ++s) out[s] = R.add(out[s], R.mul(ab, p.mul[i][j][s]));
    }
  }
  return out;
}

Coords unit_vector(const LocalRingPresentation& p, std::size_t j) {
  Coords e(p.ann.size(), p.base->zero());
  e[j] = p.base->one();
  return e;
}

std::string coords_string(const Coords& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i].code);
  return s + ")";
}

}  // namespace

void validate_presentation(const LocalRingPresentation& p) {
  if (!p.base) fail("missing base ring");
  if (p.base->kind() != RingKind::IntegerMod && p.base->kind() != RingKind::Galois)
    fail("base must be a Galois ring, got " + p.base->describe());
  const ChainRing& R = *p.base;
  const std::size_t g = p.ann.size();
  if (g == 0) fail("empty basis");
  if (p.mul.size() != g || p.one.size() != g) fail("structure sizes do not match the basis");
  for (std::size_t i = 0; i < g; ++i) {
    if (p.ann[i] < 1 || p.ann[i] > R.nilpotency())
      fail("annihilator exponent " + std::to_string(p.ann[i]) + " outside [1, " + std::to_string(R.nilpotency()) + "]");
    if (p.mul[i].size() != g) fail("structure constants are not square");
    for (std::size_t j = 0; j < g; ++j) {
      if (p.mul[i][j].size() != g) fail("structure constant vector has wrong length");
      for (Elem e : p.mul[i][j])
        if (e.code >= R.size()) fail("structure constant out of range");
    }
  }
  if (!p.names.empty() && p.names.size() != g) fail("wrong number of basis names");
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      // p^ann[i] t_i = 0 must annihilate t_i t_j
      Coords scaled = p.mul[i][j];
      for (auto& e : scaled) e = R.mul(e, R.p_power(p.ann[i]));
      if (!coordinates_vanish(p, scaled))
        fail("p^" + std::to_string(p.ann[i]) + " t" + std::to_string(i + 1) + " t" + std::to_string(j + 1) +
             " is not zero");
      if (reduce(p, p.mul[i][j]) != reduce(p, p.mul[j][i]))
        fail("t" + std::to_string(i + 1) + " t" + std::to_string(j + 1) + " != t" + std::to_string(j + 1) + " t" +
             std::to_string(i + 1) + " (not commutative)");
    }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) {
        Coords left = mul_raw(p, p.mul[i][j], unit_vector(p, k));
        Coords right = mul_raw(p, unit_vector(p, i), p.mul[j][k]);
        if (reduce(p, left) != reduce(p, right))
          fail("(t" + std::to_string(i + 1) + " t" + std::to_string(j + 1) + ") t" + std::to_string(k + 1) +
               " != t" + std::to_string(i + 1) + " (t" + std::to_string(j + 1) + " t" + std::to_string(k + 1) +
               ") (not associative)");
      }
  for (std::size_t j = 0; j < g; ++j)
    if (reduce(p, mul_raw(p, p.one, unit_vector(p, j))) != reduce(p, unit_vector(p, j)))
      fail("unity " + coords_string(p.one) + " does not fix t" + std::to_string(j + 1));
}

bool coordinates_vanish(const LocalRingPresentation& p, const std::vector<Elem>& u) {
  const ChainRing& R = *p.base;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (!R.is_zero(R.mul(R.p_power(R.nilpotency() - p.ann[j]), u[j]))) return false;
  return true;
}

// ---------------------------------------------------------------- LocalRing

LocalRing::LocalRing(LocalRingPresentation p) : p_(std::move(p)) {
  validate_presentation(p_);
  const ChainRing& R = *p_.base;
  const std::size_t g = gamma();
  for (std::size_t j = 0; j < g; ++j) {
    std::vector<Elem> reps;
    std::vector<std::uint32_t> idx(R.size(), 0);
    for (std::uint64_t c = 0; c < R.size(); ++c)
      if (R.reduce_mod_p_power(Elem{c}, p_.ann[j]) == Elem{c}) reps.push_back(Elem{c});
    for (std::uint64_t c = 0; c < R.size(); ++c) {
      Elem r = R.reduce_mod_p_power(Elem{c}, p_.ann[j]);
      idx[c] = static_cast<std::uint32_t>(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
    }
    reps_.push_back(std::move(reps));
    index_.push_back(std::move(idx));
  }
  radix_.assign(g, 1);
  for (std::size_t j = g; j-- > 0;) {
    radix_[j] = size_;
    if (size_ > (std::uint64_t{1} << 40) / reps_[j].size()) throw TooLarge("local ring is too large");
    size_ *= reps_[j].size();
  }
  if (p_.names.empty()) {
    std::size_t non_unit = 0;
    for (std::size_t j = 0; j < g; ++j)
      if (reduce(p_, p_.one) != reduce(p_, unit_vector(p_, j))) ++non_unit;
    for (std::size_t j = 0; j < g; ++j) {
      bool unity = reduce(p_, p_.one) == reduce(p_, unit_vector(p_, j));
      p_.names.push_back(non_unit == 1 && !unity ? "t" : "t" + std::to_string(j + 1));
    }
  }
  one_ = from_coords(p_.one);
  if (size_ <= 1024) {
    table_.resize(size_ * size_);
    for (std::uint64_t a = 0; a < size_; ++a)
      for (std::uint64_t b = 0; b < size_; ++b)
        table_[a * size_ + b] = static_cast<std::uint32_t>(from_coords(mul_coords(coords(Elem{a}), coords(Elem{b}))).code);
  }
}

std::shared_ptr<const LocalRing> LocalRing::create(LocalRingPresentation p) {
  return std::make_shared<const LocalRing>(std::move(p));
}

std::string LocalRing::describe() const {
  std::ostringstream os;
  os << "Local[" << p_.base->describe() << "](ann=";
  for (std::size_t j = 0; j < gamma(); ++j) os << (j ? "," : "") << p_.ann[j];
  os << ";mul=";
  for (std::size_t i = 0; i < gamma(); ++i)
    for (std::size_t j = 0; j < gamma(); ++j) os << coords_string(reduce(p_, p_.mul[i][j]));
  os << ";one=" << coords_string(reduce(p_, p_.one)) << ")";
  return os.str();
}

std::vector<Elem> LocalRing::coords(Elem a) const {
  std::vector<Elem> u(gamma());
  for (std::size_t j = 0; j < gamma(); ++j) u[j] = reps_[j][(a.code / radix_[j]) % reps_[j].size()];
  return u;
}

Elem LocalRing::from_coords(const std::vector<Elem>& u) const {
  if (u.size() != gamma()) throw DomainError("coordinate vector has wrong length");
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < gamma(); ++j) {
    if (u[j].code >= p_.base->size()) throw DomainError("coordinate out of range");
    code += index_[j][u[j].code] * radix_[j];
  }
  return Elem{code};
}

std::vector<Elem> LocalRing::mul_coords(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
  return mul_raw(p_, a, b);
}

Elem LocalRing::embed(Elem b) const {
  Coords u = p_.one;
  for (auto& e : u) e = p_.base->mul(e, b);
  return from_coords(u);
}

Elem LocalRing::basis(std::size_t j) const { return from_coords(unit_vector(p_, j)); }

Elem LocalRing::add(Elem a, Elem b) const {
  Coords x = coords(a), y = coords(b);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = p_.base->add(x[j], y[j]);
  return from_coords(x);
}

Elem LocalRing::sub(Elem a, Elem b) const {
  Coords x = coords(a), y = coords(b);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = p_.base->sub(x[j], y[j]);
  return from_coords(x);
}

Elem LocalRing::neg(Elem a) const {
  Coords x = coords(a);
  for (auto& e : x) e = p_.base->neg(e);
  return from_coords(x);
}

Elem LocalRing::mul(Elem a, Elem b) const {
  if (!table_.empty()) return Elem{table_[a.code * size_ + b.code]};
  return from_coords(mul_coords(coords(a), coords(b)));
}

Elem LocalRing::from_int(std::int64_t n) const { return embed(p_.base->from_int(n)); }

bool LocalRing::is_unit(Elem a) const {
  for (std::uint64_t b = 0; b < size_; ++b)
    if (mul(a, Elem{b}) == one_) return true;
  return false;
}

Elem LocalRing::inverse(Elem a) const {
  for (std::uint64_t b = 0; b < size_; ++b)
    if (mul(a, Elem{b}) == one_) return Elem{b};
  throw NotAUnit(to_string(a) + " is not a unit");
}

std::string LocalRing::to_string(Elem a) const {
  Coords u = coords(a);
  std::string out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (p_.base->is_zero(u[j])) continue;
    bool is_one = reduce(p_, unit_vector(p_, j)) == reduce(p_, p_.one);
    std::string c = p_.base->to_string(u[j]);
    std::string term;
    if (is_one) {
      term = c;
    } else if (u[j] == p_.base->one()) {
      term = p_.names[j];
    } else {
      if (c.find('+') != std::string::npos) c = "(" + c + ")";
      term = c + "*" + p_.names[j];
    }
    out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

std::optional<Elem> LocalRing::named_constant(std::string_view name) const {
  for (std::size_t j = 0; j < gamma(); ++j)
    if (p_.names[j] == name) return basis(j);
  if (auto c = p_.base->named_constant(name)) return embed(*c);
  return std::nullopt;
}

// ---------------------------------------------------------------- quotient helper

LocalRingPtr quotient_local_ring(std::uint64_t p, unsigned k, const std::vector<std::int64_t>& f, unsigned t) {
  if (f.empty() || f.back() != 1) throw DomainError("f must be monic");
  auto Z = IntegerModRing::create(p, k);
  auto ctx = PolyContext::create(Z, {"X"});
  std::vector<Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) terms.push_back({Z->from_int(f[i]), {static_cast<std::uint32_t>(i)}});
  MultiPoly fp = MultiPoly::from_terms(ctx, terms);
  MultiPoly px = MultiPoly::monomial(ctx, Z->p_power(t), {1});
  auto G = groebner_basis({fp, px}).generators;

  unsigned d = static_cast<unsigned>(f.size() - 1);
  for (const auto& g : G)
    if (Z->valuation(g.leading_coefficient()) == 0) d = std::min(d, g.leading_monomial()[0]);
  std::vector<unsigned> v(d, k);
  for (unsigned i = 0; i < d; ++i)
    for (const auto& g : G)
      if (g.leading_monomial()[0] <= i) v[i] = std::min(v[i], Z->valuation(g.leading_coefficient()));
  if (d == 0 || v[0] == 0) throw NotARing("the quotient is the zero ring");
  std::vector<unsigned> degs;
  for (unsigned i = 0; i < d; ++i)
    if (v[i] > 0) degs.push_back(i);

  LocalRingPresentation pres;
  const unsigned s = v[0];
  pres.base = IntegerModRing::create(p, s);
  const std::size_t g = degs.size();
  for (unsigned i : degs) pres.ann.push_back(v[i]);
  pres.mul.assign(g, std::vector<std::vector<Elem>>(g, std::vector<Elem>(g, Elem{0})));
  const std::uint64_t ps = pres.base->size();
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) {
      auto nf = strong_reduce(MultiPoly::monomial(ctx, Z->one(), {degs[a] + degs[b]}), G);
      for (const auto& term : nf.terms()) {
        auto pos = std::find(degs.begin(), degs.end(), term.exps[0]);
        if (pos == degs.end()) throw NotARing("normal form leaves the standard monomials");
        pres.mul[a][b][static_cast<std::size_t>(pos - degs.begin())] = Elem{term.coef.code % ps};
      }
    }
  pres.one.assign(g, Elem{0});
  pres.one[0] = pres.base->one();
  return LocalRing::create(std::move(pres));
}

// ---------------------------------------------------------------- expansion

namespace {

using CoordPoly = std::vector<MultiPoly>;

CoordPoly cp_mul(const LocalRingPresentation& p, const CoordPoly& a, const CoordPoly& b, const PolyContextPtr& ctx) {
  const std::size_t g = p.ann.size();
  CoordPoly out(g, MultiPoly(ctx));
  for (std::size_t i = 0; i < g; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < g; ++j) {
      if (b[j].is_zero()) continue;
      MultiPoly ab = a[i] * b[j];
      for (std::size_t s = 0; s < g; ++s)
        if (!p.base->is_zero(p.mul[i][j][s])) out[s] = out[s] + ab.scale(p.mul[i][j][s]);
    }
  }
  return out;
}

}  // namespace

ExpandedSystem expand_system(const std::vector<MultiPoly>& F) {
  if (F.empty()) throw DomainError("empty system");
  const auto& octx = F.front().context();
  const auto* L = dynamic_cast<const LocalRing*>(&octx->ring());
  if (!L) throw DomainError("expand_system needs a local ring presentation, got " + octx->ring().describe());
  const auto& p = L->presentation();
  const std::size_t k = octx->nvars(), g = L->gamma();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < g; ++j) names.push_back(octx->vars()[i] + "_" + std::to_string(j + 1));
  std::vector<std::size_t> prec;
  for (std::size_t i : octx->order().precedence())
    for (std::size_t j = 0; j < g; ++j) prec.push_back(i * g + j);
  auto ctx = PolyContext::create(p.base, names, MonomialOrder(octx->order().kind(), prec));

  ExpandedSystem E{ctx, {}, k, g};
  // x_i as a coordinate vector and its powers
  std::vector<std::vector<CoordPoly>> powers(k);
  for (std::size_t i = 0; i < k; ++i) {
    CoordPoly one(g, MultiPoly(ctx));
    for (std::size_t j = 0; j < g; ++j) one[j] = MultiPoly::constant(ctx, p.one[j]);
    CoordPoly x(g, MultiPoly(ctx));
    for (std::size_t j = 0; j < g; ++j) x[j] = MultiPoly::variable(ctx, i * g + j);
    powers[i] = {one, x};
  }
  auto power = [&](std::size_t i, std::uint32_t e) -> const CoordPoly& {
    while (powers[i].size() <= e) powers[i].push_back(cp_mul(p, powers[i].back(), powers[i][1], ctx));
    return powers[i][e];
  };
  const ChainRing& R = *p.base;
  for (const auto& f : F) {
    CoordPoly acc(g, MultiPoly(ctx));
    for (const auto& t : f.terms()) {
      CoordPoly term(g, MultiPoly(ctx));
      auto c = L->coords(t.coef);
      for (std::size_t j = 0; j < g; ++j) term[j] = MultiPoly::constant(ctx, c[j]);
      for (std::size_t i = 0; i < k; ++i)
        if (t.exps[i] > 0) term = cp_mul(p, term, power(i, t.exps[i]), ctx);
      for (std::size_t s = 0; s < g; ++s) acc[s] = acc[s] + term[s];
    }
    for (std::size_t s = 0; s < g; ++s) {
      MultiPoly eq = acc[s].scale(R.p_power(R.nilpotency() - p.ann[s]));
      if (!eq.is_zero()) E.equations.push_back(std::move(eq));
    }
  }
  return E;
}

SolutionSet contract_solutions(const PolyContextPtr& original, const ExpandedSystem& E, const SolutionSet& sols,
                               std::size_t cap) {
  const auto& L = dynamic_cast<const LocalRing&>(original->ring());
  const std::size_t k = E.original_vars, g = E.gamma;
  SolutionSet out{original->ring_ptr(), original->vars(), {}, sols.truncated, cap, sols.diagnostics};
  std::set<std::vector<std::uint64_t>> seen;  // explicit rows, +1 offset, 0 = free
  for (const auto& row : sols.rows) {
    std::vector<std::vector<std::optional<Elem>>> choices(k);
    for (std::size_t i = 0; i < k; ++i) {
      bool all_free = true;
      for (std::size_t j = 0; j < g; ++j)
        if (row[i * g + j]) all_free = false;
      if (all_free) {
        choices[i].push_back(std::nullopt);
        continue;
      }
      // free coordinates range over residues modulo p^ann[j]
      std::set<std::uint64_t> vals;
      std::vector<std::vector<Elem>> opts(g);
      for (std::size_t j = 0; j < g; ++j) {
        if (row[i * g + j]) {
          opts[j].push_back(*row[i * g + j]);
        } else {
          for (std::uint64_t c = 0; c < L.base().size(); ++c)
            if (L.base().reduce_mod_p_power(Elem{c}, L.presentation().ann[j]) == Elem{c}) opts[j].push_back(Elem{c});
        }
      }
      std::vector<std::size_t> idx(g, 0);
      while (true) {
        std::vector<Elem> u(g);
        for (std::size_t j = 0; j < g; ++j) u[j] = opts[j][idx[j]];
        vals.insert(L.from_coords(u).code);
        std::size_t j = 0;
        while (j < g && ++idx[j] == opts[j].size()) idx[j++] = 0;
        if (j == g) break;
      }
      for (auto v : vals) choices[i].push_back(Elem{v});
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<std::uint64_t> key(k);
      std::vector<std::optional<Elem>> r(k);
      for (std::size_t i = 0; i < k; ++i) {
        r[i] = choices[i][idx[i]];
        key[i] = r[i] ? r[i]->code + 1 : 0;
      }
      if (seen.insert(key).second) {
        if (out.rows.size() >= cap) {
          out.truncated = true;
          return out;
        }
        out.rows.push_back(std::move(r));
      }
      std::size_t i = 0;
      while (i < k && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == k) break;
    }
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t x = a[i] ? a[i]->code + 1 : 0, y = b[i] ? b[i]->code + 1 : 0;
      if (x != y) return x < y;
    }
    return false;
  });
  return out;
}

SolutionSet solve_local(const std::vector<MultiPoly>& F, SolveMethod method, const SolveOptions& opts) {
  auto E = expand_system(F);
  SolutionSet base;
  if (E.equations.empty()) {
    base = SolutionSet{E.context->ring_ptr(), E.context->vars(),
                       {std::vector<std::optional<Elem>>(E.context->nvars())}, false, opts.max_solutions, {}};
  } else {
    base = method == SolveMethod::Lifting ? solve_system_lifting(E.equations, opts) : solve_system(E.equations, opts);
  }
  auto out = contract_solutions(F.front().context(), E, base, opts.max_solutions);
  // every explicit root satisfies the original system
  const Ring& L = F.front().ring();
  for (const auto& row : out.rows) {
    if (std::any_of(row.begin(), row.end(), [](const auto& c) { return !c; })) continue;
    std::vector<Elem> pt;
    for (const auto& c : row) pt.push_back(*c);
    for (const auto& f : F)
      if (!L.is_zero(f.evaluate(pt))) throw std::logic_error("local solution does not satisfy the system");
  }
  return out;
}

}  // namespace chainring
