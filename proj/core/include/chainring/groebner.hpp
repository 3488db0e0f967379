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

#ifndef CHAINRING_GROEBNER_HPP
#define CHAINRING_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "chainring/poly.hpp"

namespace chainring {

struct GroebnerOptions {
  // Product and chain criteria; off by default, checked against the plain run in tests.
  bool use_criteria = false;
  // Bound on S/A-polynomials processed plus reduction steps.
  std::size_t max_steps = 2'000'000;
};

struct GroebnerBasis {
  PolyContextPtr context;
  // Canonical form: minimal, interreduced, leading coefficients p^v, sorted
  // by decreasing leading monomial then increasing valuation.
  std::vector<MultiPoly> generators;
  std::size_t pairs_processed = 0;
  std::size_t reduction_steps = 0;
};

// c1 * m1 * g1 - c2 * m2 * g2 cancelling the leading terms.
MultiPoly s_polynomial(const MultiPoly& g1, const MultiPoly& g2);
// p^(nu - val(lc g)) * g.
MultiPoly a_polynomial(const MultiPoly& g);

// Strong Groebner basis over a chain ring (Buchberger with the normal strategy).
// Throws ResourceExceeded past opts.max_steps.
GroebnerBasis groebner_basis(const std::vector<MultiPoly>& F, const GroebnerOptions& opts = {});

// Minimalize, normalize leading coefficients and interreduce.
std::vector<MultiPoly> canonical_basis(std::vector<MultiPoly> G);

// Every S- and A-polynomial strongly reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& G);
bool ideal_contains(const GroebnerBasis& G, const MultiPoly& f);

// Generators involving only the variables precedence[first_kept..] of a lex order.
GroebnerBasis elimination_subbasis(const GroebnerBasis& G, std::size_t first_kept);

// Minimal strong basis {p^a_i g_i} of a univariate ideal with monic g_i and
// the ladder h_j = g_i for a_i <= j < a_{i+1}.
struct UnivariateLadder {
  std::size_t var = 0;
  std::vector<unsigned> exponents;   // a_0 = 0 < a_1 < ... < a_s
  std::vector<MultiPoly> monic;      // g_0, ..., g_s
  std::vector<MultiPoly> ladder;     // h_0, ..., h_{nu-1}
};
UnivariateLadder minimal_univariate_basis(const std::vector<MultiPoly>& F, std::size_t var);

}  // namespace chainring

#endif
