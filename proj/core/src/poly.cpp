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

#include "chainring/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace chainring {

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw DomainError("variable precedence is not a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::Lex, p};
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::DegRevLex, p};
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  if (kind_ == OrderKind::Lex) {
    for (std::size_t v : precedence_)
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    return 0;
  }
  unsigned da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = precedence_.size(); i-- > 0;) {
    std::size_t v = precedence_[i];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------- context

PolyContext::PolyContext(RingPtr ring, std::vector<std::string> vars, MonomialOrder order)
    : ring_(std::move(ring)), vars_(std::move(vars)), order_(std::move(order)) {
  if (!ring_) throw DomainError("polynomial context needs a ring");
  if (order_.precedence().size() != vars_.size()) throw DomainError("order does not match the variables");
  std::vector<std::string> sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("duplicate variable name");
}

PolyContextPtr PolyContext::create(RingPtr ring, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyContext>(std::move(ring), std::move(vars), std::move(order));
}

PolyContextPtr PolyContext::create(RingPtr ring, std::vector<std::string> vars) {
  auto order = MonomialOrder::lex(vars.size());
  return create(std::move(ring), std::move(vars), std::move(order));
}

std::optional<std::size_t> PolyContext::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

PolyContextPtr PolyContext::with_order(MonomialOrder order) const { return create(ring_, vars_, std::move(order)); }

// ---------------------------------------------------------------- monomials

bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) throw DomainError("monomial does not divide");
    r[i] = b[i] - a[i];
  }
  return r;
}

unsigned monomial_degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0u); }

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void check_same_context(const MultiPoly& a, const MultiPoly& b) {
  if (a.context() == b.context()) return;
  if (a.nvars() != b.nvars() || !(a.context()->order() == b.context()->order()) ||
      !a.ring().same_as(b.ring()))
    throw DomainError("polynomials live in different polynomial rings");
}

}  // namespace

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(PolyContextPtr ctx, Elem c) {
  Exponents z(ctx->nvars(), 0);
  return monomial(std::move(ctx), c, std::move(z));
}

MultiPoly MultiPoly::variable(PolyContextPtr ctx, std::size_t var) {
  if (var >= ctx->nvars()) throw DomainError("variable index out of range");
  Exponents e(ctx->nvars(), 0);
  e[var] = 1;
  Elem one = ctx->ring().one();
  return monomial(std::move(ctx), one, std::move(e));
}

MultiPoly MultiPoly::monomial(PolyContextPtr ctx, Elem c, Exponents exps) {
  if (exps.size() != ctx->nvars()) throw DomainError("exponent vector has wrong length");
  MultiPoly p(std::move(ctx));
  if (!p.ring().is_zero(c)) p.terms_.push_back({c, std::move(exps)});
  return p;
}

MultiPoly MultiPoly::from_terms(PolyContextPtr ctx, std::vector<Term> terms) {
  MultiPoly p(std::move(ctx));
  const auto& ord = p.ctx_->order();
  const Ring& R = p.ring();
  for (const auto& t : terms)
    if (t.exps.size() != p.nvars()) throw DomainError("exponent vector has wrong length");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.compare(a.exps, b.exps) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coef = R.add(p.terms_.back().coef, t.coef);
      if (R.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
    } else if (!R.is_zero(t.coef)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_[0].exps) == 0);
}

Elem MultiPoly::constant_term() const {
  if (!terms_.empty() && monomial_degree(terms_.back().exps) == 0) return terms_.back().coef;
  return ring().zero();
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  return terms_.front();
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, monomial_degree(t.exps));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[var]);
  return d;
}

bool MultiPoly::uses(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.exps[var] != 0) return true;
  return false;
}

std::vector<std::size_t> MultiPoly::used_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars(); ++v)
    if (uses(v)) out.push_back(v);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = ring().neg(t.coef);
  return r;
}

MultiPoly MultiPoly::sub_mul_term(Elem c, const Exponents& m, const MultiPoly& g) const {
  check_same_context(*this, g);
  const Ring& R = ring();
  const auto& ord = ctx_->order();
  MultiPoly r(ctx_);
  if (R.is_zero(c)) return *this;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Exponents e;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size()) e = add_exps(g.terms_[j].exps, m);
    int cmp = (i == terms_.size()) ? -1 : (j == g.terms_.size() ? 1 : ord.compare(terms_[i].exps, e));
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      Elem v = R.neg(R.mul(c, g.terms_[j].coef));
      if (!R.is_zero(v)) r.terms_.push_back({v, e});
      ++j;
    } else {
      Elem v = R.sub(terms_[i].coef, R.mul(c, g.terms_[j].coef));
      if (!R.is_zero(v)) r.terms_.push_back({v, e});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  Exponents zero(a.nvars(), 0);
  return a.sub_mul_term(a.ring().neg(a.ring().one()), zero, b);
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  Exponents zero(a.nvars(), 0);
  return a.sub_mul_term(a.ring().one(), zero, b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_context(a, b);
  const Ring& R = a.ring();
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Elem c = R.mul(s.coef, t.coef);
      if (!R.is_zero(c)) terms.push_back({c, add_exps(s.exps, t.exps)});
    }
  return MultiPoly::from_terms(a.ctx_, std::move(terms));
}

MultiPoly MultiPoly::scale(Elem c) const {
  const Ring& R = ring();
  MultiPoly r(ctx_);
  for (const auto& t : terms_) {
    Elem v = R.mul(t.coef, c);
    if (!R.is_zero(v)) r.terms_.push_back({v, t.exps});
  }
  return r;
}

MultiPoly MultiPoly::mul_term(Elem c, const Exponents& m) const {
  const Ring& R = ring();
  MultiPoly r(ctx_);
  for (const auto& t : terms_) {
    Elem v = R.mul(t.coef, c);
    if (!R.is_zero(v)) r.terms_.push_back({v, add_exps(t.exps, m)});
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ctx_, ring().one());
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Elem MultiPoly::evaluate(std::span<const Elem> point) const {
  if (point.size() != nvars()) throw DomainError("evaluation point has wrong length");
  const Ring& R = ring();
  // powers[v][e] = point[v]^e, built on demand
  std::vector<std::vector<Elem>> powers(nvars());
  Elem acc = R.zero();
  for (const auto& t : terms_) {
    Elem v = t.coef;
    for (std::size_t i = 0; i < t.exps.size() && !R.is_zero(v); ++i) {
      if (t.exps[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(R.one());
      while (pw.size() <= t.exps[i]) pw.push_back(R.mul(pw.back(), point[i]));
      v = R.mul(v, pw[t.exps[i]]);
    }
    acc = R.add(acc, v);
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var, Elem value) const {
  const Ring& R = ring();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{R.mul(t.coef, R.pow(value, t.exps[var])), t.exps};
    n.exps[var] = 0;
    terms.push_back(std::move(n));
  }
  return from_terms(ctx_, std::move(terms));
}

MultiPoly MultiPoly::compose(std::size_t var, const MultiPoly& value) const {
  MultiPoly result(ctx_);
  std::vector<MultiPoly> powers{constant(ctx_, ring().one())};
  for (const auto& t : terms_) {
    while (powers.size() <= t.exps[var]) powers.push_back(powers.back() * value);
    Exponents rest = t.exps;
    rest[var] = 0;
    result = result + powers[t.exps[var]].mul_term(t.coef, rest);
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  const Ring& R = ring();
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term n{R.mul(t.coef, R.from_int(t.exps[var])), t.exps};
    n.exps[var] -= 1;
    terms.push_back(std::move(n));
  }
  return from_terms(ctx_, std::move(terms));
}

MultiPoly MultiPoly::with_context(PolyContextPtr ctx) const {
  if (ctx->nvars() != nvars() || !ctx->ring().same_as(ring()))
    throw DomainError("incompatible polynomial context");
  return from_terms(std::move(ctx), terms_);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  const Ring& R = ring();
  std::string out;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->vars()[i];
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    std::string coef = R.to_string(t.coef);
    if (coef.find_first_of("+ ") != std::string::npos && coef.front() != '(') coef = "(" + coef + ")";
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += coef;
    else if (t.coef == R.one())
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------- reduction

bool term_divides(const ChainRing& R, const Term& divisor, const Term& dividend) {
  return monomial_divides(divisor.exps, dividend.exps) && R.valuation(divisor.coef) <= R.valuation(dividend.coef);
}

std::optional<Term> term_cofactor(const ChainRing& R, const Term& divisor, const Term& dividend) {
  if (!term_divides(R, divisor, dividend) || R.is_zero(divisor.coef)) return std::nullopt;
  return Term{R.quotient(dividend.coef, divisor.coef), monomial_quotient(dividend.exps, divisor.exps)};
}

namespace {

const MultiPoly* find_reducer(const ChainRing& R, const Term& t, const std::vector<MultiPoly>& F, std::size_t* index) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero()) continue;
    if (term_divides(R, F[i].leading_term(), t)) {
      if (index) *index = i;
      return &F[i];
    }
  }
  return nullptr;
}

Reduction reduce_impl(const MultiPoly& f, const std::vector<MultiPoly>& F, bool full, bool record) {
  const ChainRing& R = f.ring().as_chain();
  Reduction out{MultiPoly(f.context()), {}};
  if (record) out.quotients.assign(F.size(), MultiPoly(f.context()));
  std::vector<Term> rest;
  MultiPoly h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    std::size_t idx = 0;
    const MultiPoly* g = find_reducer(R, lt, F, &idx);
    if (g == nullptr) {
      if (!full) break;
      rest.push_back(lt);
      Exponents zero(f.nvars(), 0);
      h = h.sub_mul_term(R.one(), zero, MultiPoly::monomial(f.context(), lt.coef, lt.exps));
      continue;
    }
    Elem c = R.quotient(lt.coef, g->leading_coefficient());
    Exponents m = monomial_quotient(lt.exps, g->leading_monomial());
    Exponents before = lt.exps;
    if (record) out.quotients[idx] = out.quotients[idx] + MultiPoly::monomial(f.context(), c, m);
    h = h.sub_mul_term(c, m, *g);
    if (!h.is_zero() && f.context()->order().compare(h.leading_monomial(), before) >= 0)
      throw std::logic_error("strong reduction did not decrease the leading monomial");
  }
  rest.insert(rest.end(), h.terms().begin(), h.terms().end());
  out.remainder = MultiPoly::from_terms(f.context(), std::move(rest));
  return out;
}

}  // namespace

MultiPoly strong_reduce_head(const MultiPoly& f, const std::vector<MultiPoly>& F) {
  return reduce_impl(f, F, false, false).remainder;
}

MultiPoly strong_reduce(const MultiPoly& f, const std::vector<MultiPoly>& F) {
  return reduce_impl(f, F, true, false).remainder;
}

Reduction strong_reduce_with_quotients(const MultiPoly& f, const std::vector<MultiPoly>& F) {
  return reduce_impl(f, F, true, true);
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const PolyContextPtr& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(ctx_);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MultiPoly t = term();
    acc = neg ? acc - t : acc + t;
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      skip();
      if (eat('*')) {
        acc = acc * factor();
        continue;
      }
      // implicit product such as 2x or 3(x+1)
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_')) {
        acc = acc * factor();
        continue;
      }
      break;
    }
    return acc;
  }

  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    unsigned e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (e > 100000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected exponent");
    return e;
  }

  MultiPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    MultiPoly base(ctx_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (c == '-') {
      ++pos_;
      return -factor();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const Ring& R = ctx_->ring();
      Elem v = R.zero(), ten = R.from_int(10);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = R.add(R.mul(v, ten), R.from_int(s_[pos_++] - '0'));
      base = MultiPoly::constant(ctx_, v);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (auto idx = ctx_->var_index(name)) {
        base = MultiPoly::variable(ctx_, *idx);
      } else if (auto c = ctx_->ring().named_constant(name)) {
        base = MultiPoly::constant(ctx_, *c);
      } else {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    if (eat('^')) return base.pow(exponent());
    return base;
  }

  const PolyContextPtr& ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const PolyContextPtr& ctx, std::string_view text) { return Parser(ctx, text).parse(); }

}  // namespace chainring
