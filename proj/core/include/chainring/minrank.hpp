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

#ifndef CHAINRING_MINRANK_HPP
#define CHAINRING_MINRANK_HPP

#include <optional>
#include <string>
#include <vector>

#include "chainring/matrix.hpp"
#include "chainring/poly.hpp"
#include "chainring/solve.hpp"

namespace chainring {

// Find x with rk(M_0 + x_1 M_1 + ... + x_k M_k) <= r.
struct MinRankInstance {
  RingPtr ring;
  std::vector<RingMatrix> matrices;  // M_0 first; all zero for a homogeneous instance
  std::size_t r = 1;

  std::size_t k() const { return matrices.size() - 1; }
  std::size_t rows() const { return matrices.front().rows(); }
  std::size_t cols() const { return matrices.front().cols(); }
  bool homogeneous() const { return matrices.front().is_zero(); }
  // Throws DomainError on inconsistent shapes or rings.
  void validate() const;
};

// Homogeneous instance from M_1..M_k.
MinRankInstance homogeneous_instance(RingPtr ring, std::vector<RingMatrix> Ms, std::size_t r);
RingMatrix instance_matrix(const MinRankInstance& inst, const std::vector<Elem>& x);
MinRankInstance transpose_instance(const MinRankInstance& inst);

struct ModelSystem {
  PolyContextPtr context;
  std::vector<MultiPoly> equations;
  std::vector<std::size_t> x_vars;  // indices of x_1..x_k in the context
};

// M_x Z = 0 where Z has identity rows outside `zprime_rows` (r column
// indices) and variable rows z inside. Lex with every z above every x.
ModelSystem ks_model(const MinRankInstance& inst, const std::vector<std::size_t>& zprime_rows);
// Column sets tried by the Kipnis-Shamir solver: the last r columns, then all others in lex order.
std::vector<std::vector<std::size_t>> ks_schedule(std::size_t n, std::size_t r);

// Bilinear maximal-minor equations in x and the Plucker variables z_J; when
// unit_subset is set, that z_J is fixed to 1.
ModelSystem sm_model(const MinRankInstance& inst, std::optional<std::size_t> unit_subset = std::nullopt);

// Linearized Support-Minors system. Columns are x_l z_J (l inner) grouped by J
// in lex order, with the z_J column after each group for inhomogeneous
// instances; the block of the unit subset is moved last.
struct SMLinearization {
  RingMatrix A;
  RingMatrix echelon;  // nonzero rows of the Hermite form of A
  std::vector<std::string> columns;
  std::size_t unit_subset = 0;
  // Rows of the echelon form supported on the unit block, as linear
  // constraints C x = d.
  RingMatrix C;
  std::vector<Elem> d;
};
SMLinearization sm_linearization(const MinRankInstance& inst, std::size_t unit_subset);

enum class MinRankStrategy { KipnisShamir, SupportMinorsGroebner, SupportMinorsLinearization };
std::string to_string(MinRankStrategy s);
MinRankStrategy parse_minrank_strategy(const std::string& s);

struct MinRankOptions {
  // Default: append F_m when |R| <= 512.
  std::optional<bool> field_equations;
  // Candidate cap for the linearization case split.
  std::size_t max_candidates = std::size_t{1} << 16;
  GroebnerOptions groebner;
};

// Every x with rk(M_x) <= r, sorted; each one is checked with linalg rank.
// Product rings are solved componentwise. Linearization throws Inconclusive
// when the unit-block constraints leave too many candidates.
std::vector<std::vector<Elem>> solve_minrank(const MinRankInstance& inst,
                                             MinRankStrategy strategy = MinRankStrategy::KipnisShamir,
                                             const MinRankOptions& opts = {});

}  // namespace chainring

#endif
