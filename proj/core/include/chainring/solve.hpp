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

#ifndef CHAINRING_SOLVE_HPP
#define CHAINRING_SOLVE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chainring/groebner.hpp"
#include "chainring/poly.hpp"

namespace chainring {

// Solutions of a polynomial system. A cell without a value stands for every
// element of the ring.
struct SolutionSet {
  RingPtr ring;
  std::vector<std::string> variables;
  std::vector<std::vector<std::optional<Elem>>> rows;
  bool truncated = false;
  std::size_t cap = 0;
  std::vector<std::string> diagnostics;

  // Number of tuples after expanding free cells.
  std::size_t count() const;
  // Sorted explicit tuples; throws TooLarge beyond the given limit.
  std::vector<std::vector<Elem>> expand(std::size_t limit = std::size_t{1} << 20) const;
  bool contains(const std::vector<Elem>& point) const;
  // Distinct values of the given variables, sorted; free cells expand over R.
  std::vector<std::vector<Elem>> project(const std::vector<std::size_t>& vars,
                                         std::size_t limit = std::size_t{1} << 20) const;
};

struct SolveOptions {
  // Append F_m(x_i) for every variable before computing bases.
  bool field_equations = false;
  std::size_t max_solutions = std::size_t{1} << 16;
  GroebnerOptions groebner;
};

// Roots in R of a system in the single variable var.
SolutionSet solve_univariate(const std::vector<MultiPoly>& F, std::size_t var, const SolveOptions& opts = {});

// Elimination with back-substitution over a lex basis; product rings are
// solved componentwise.
SolutionSet solve_system(const std::vector<MultiPoly>& F, const SolveOptions& opts = {});

// Residue-field solutions lifted one pi-adic digit at a time through the
// Jacobian.
SolutionSet solve_system_lifting(const std::vector<MultiPoly>& F, const SolveOptions& opts = {});

// Monic polynomial of least degree vanishing on all of R, as dense
// coefficients (constant term first). Throws TooLarge when |R| > 2^16.
const std::vector<Elem>& vanishing_polynomial(const ChainRing& R);
MultiPoly ring_vanishing_polynomial(const PolyContextPtr& ctx, std::size_t var);

}  // namespace chainring

#endif
