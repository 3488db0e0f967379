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

#ifndef CHAINRING_ORACLES_HPP
#define CHAINRING_ORACLES_HPP

// Exhaustive reference computations for small instances. They avoid the
// Groebner, Smith and lifting code paths so they can certify them.

#include <cstdint>
#include <set>
#include <vector>

#include "chainring/matrix.hpp"
#include "chainring/minrank.hpp"
#include "chainring/skew.hpp"
#include "chainring/poly.hpp"
#include "chainring/solve.hpp"

namespace chainring {

struct OracleBudget {
  std::uint64_t max_count = std::uint64_t{1} << 20;
  // Default budget, overridden by the CHAINRING_BUDGET environment variable.
  static OracleBudget from_env();
  // Throws BudgetExceeded when n > max_count.
  void charge(std::uint64_t n, const char* what) const;
};

using Vec = std::vector<Elem>;

// Every point of R^k satisfying F.
SolutionSet brute_solve(const std::vector<MultiPoly>& F, const OracleBudget& budget = OracleBudget::from_env());

// Elements of the submodule generated by the given vectors.
std::set<Vec> span_of(const Ring& R, const std::vector<Vec>& gens, const OracleBudget& budget = OracleBudget::from_env());

// Smallest number of elements of row(A) generating row(A), by subset search.
std::size_t brute_rank(const RingMatrix& A, const OracleBudget& budget = OracleBudget::from_env());
// log_q |row(A)| / |p row(A)| over a chain ring.
std::size_t nakayama_rank(const RingMatrix& A, const OracleBudget& budget = OracleBudget::from_env());

struct VanishingSearch {
  std::size_t degree = 0;
  std::vector<std::vector<Elem>> polys;  // every monic vanishing polynomial of that degree, constant term first
};
VanishingSearch brute_vanishing_poly(const ChainRing& R, const OracleBudget& budget = OracleBudget::from_env());

// Every free rank-r module containing row(A), each given by its
// lexicographically smallest basis.
std::vector<RingMatrix> brute_free_envelopes(const RingMatrix& A, std::size_t r,
                                             const OracleBudget& budget = OracleBudget::from_env());

// Every x in R^k with rk(M_x) <= r, sorted.
std::vector<Vec> brute_minrank(const MinRankInstance& inst, const OracleBudget& budget = OracleBudget::from_env());

// Every monic skew polynomial of degree r with f(u) = 0, by search over S^r.
std::vector<SkewPoly> brute_annihilators(const ExtensionPtr& ext, const Vec& u, std::size_t r,
                                         const OracleBudget& budget = OracleBudget::from_env());

}  // namespace chainring

#endif
