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

#ifndef CHAINRING_POLY_HPP
#define CHAINRING_POLY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainring/ring.hpp"

namespace chainring {

using Exponents = std::vector<std::uint32_t>;

enum class OrderKind { Lex, DegRevLex };

// Monomial order with an explicit variable precedence: precedence[0] is the
// largest variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder degrevlex(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::Lex;
  std::vector<std::size_t> precedence_;
};

class PolyContext;
using PolyContextPtr = std::shared_ptr<const PolyContext>;

// Coefficient ring, variable names and monomial order shared by polynomials.
class PolyContext {
 public:
  PolyContext(RingPtr ring, std::vector<std::string> vars, MonomialOrder order);
  static PolyContextPtr create(RingPtr ring, std::vector<std::string> vars, MonomialOrder order);
  // Lex with the variables in the given order, first is largest.
  static PolyContextPtr create(RingPtr ring, std::vector<std::string> vars);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> var_index(std::string_view name) const;
  PolyContextPtr with_order(MonomialOrder order) const;

 private:
  RingPtr ring_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

struct Term {
  Elem coef;
  Exponents exps;
  friend bool operator==(const Term&, const Term&) = default;
};

bool monomial_divides(const Exponents& a, const Exponents& b);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);
Exponents monomial_quotient(const Exponents& b, const Exponents& a);
unsigned monomial_degree(const Exponents& a);

// Sparse polynomial; terms are kept in strictly decreasing monomial order
// with nonzero coefficients.
class MultiPoly {
 public:
  explicit MultiPoly(PolyContextPtr ctx) : ctx_(std::move(ctx)) {}
  static MultiPoly constant(PolyContextPtr ctx, Elem c);
  static MultiPoly variable(PolyContextPtr ctx, std::size_t var);
  static MultiPoly monomial(PolyContextPtr ctx, Elem c, Exponents exps);
  static MultiPoly from_terms(PolyContextPtr ctx, std::vector<Term> terms);

  const PolyContextPtr& context() const { return ctx_; }
  const Ring& ring() const { return ctx_->ring(); }
  std::size_t nvars() const { return ctx_->nvars(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Elem constant_term() const;

  // Throw ZeroPolynomial on the zero polynomial.
  const Term& leading_term() const;
  const Exponents& leading_monomial() const { return leading_term().exps; }
  Elem leading_coefficient() const { return leading_term().coef; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool uses(std::size_t var) const;
  std::vector<std::size_t> used_variables() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly scale(Elem c) const;
  MultiPoly mul_term(Elem c, const Exponents& m) const;
  // this - c * x^m * g, computed in one merge.
  MultiPoly sub_mul_term(Elem c, const Exponents& m, const MultiPoly& g) const;
  MultiPoly pow(unsigned e) const;

  Elem evaluate(std::span<const Elem> point) const;
  MultiPoly substitute(std::size_t var, Elem value) const;
  // Replace variable var by a polynomial.
  MultiPoly compose(std::size_t var, const MultiPoly& value) const;
  MultiPoly derivative(std::size_t var) const;
  // Same polynomial in another context with the same ring and arity.
  MultiPoly with_context(PolyContextPtr ctx) const;

  std::string to_string() const;

 private:
  PolyContextPtr ctx_;
  std::vector<Term> terms_;
};

// Strong divisibility of terms over a chain ring: the monomial divides and
// the coefficient valuation does not increase.
bool term_divides(const ChainRing& R, const Term& divisor, const Term& dividend);
// c x^m with dividend = c x^m * divisor when divisor strongly divides dividend.
std::optional<Term> term_cofactor(const ChainRing& R, const Term& divisor, const Term& dividend);

// Reduce only while the leading term is strongly divisible.
MultiPoly strong_reduce_head(const MultiPoly& f, const std::vector<MultiPoly>& F);
// Reduce every term.
MultiPoly strong_reduce(const MultiPoly& f, const std::vector<MultiPoly>& F);

struct Reduction {
  MultiPoly remainder;
  std::vector<MultiPoly> quotients;  // f = sum quotients[i] * F[i] + remainder
};
Reduction strong_reduce_with_quotients(const MultiPoly& f, const std::vector<MultiPoly>& F);

// Text form such as "4*x^2*y + y^3 + 2*y + 4". Integer coefficients; over a
// Galois ring the symbol a denotes the generator unless it is a variable.
MultiPoly parse_poly(const PolyContextPtr& ctx, std::string_view text);

}  // namespace chainring

#endif
