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

#ifndef CHAINRING_LOCALRING_HPP
#define CHAINRING_LOCALRING_HPP

#include <memory>
#include <string>
#include <vector>

#include "chainring/poly.hpp"
#include "chainring/ring.hpp"
#include "chainring/solve.hpp"

namespace chainring {

// A local ring R = R0 t_1 + ... + R0 t_g (direct sum) over a Galois ring R0
// of characteristic p^s, with Ann(t_j) = p^ann[j] R0.
struct LocalRingPresentation {
  ChainRingPtr base;
  std::vector<unsigned> ann;
  // mul[i][j] = coordinates of t_i * t_j
  std::vector<std::vector<std::vector<Elem>>> mul;
  std::vector<Elem> one;
  // Names of t_j in text; defaults to t1, t2, ... (or "t" for a single non-unit basis element).
  std::vector<std::string> names;
};

// Throws NotARing naming the first violated axiom.
void validate_presentation(const LocalRingPresentation& p);

// Zero test on unreduced coordinates: p^(s - ann[j]) u_j = 0 for all j.
bool coordinates_vanish(const LocalRingPresentation& p, const std::vector<Elem>& u);

class LocalRing final : public Ring {
 public:
  explicit LocalRing(LocalRingPresentation p);
  static std::shared_ptr<const LocalRing> create(LocalRingPresentation p);

  RingKind kind() const override { return RingKind::Local; }
  std::uint64_t size() const override { return size_; }
  std::string describe() const override;
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override;
  Elem sub(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  Elem from_int(std::int64_t n) const override;
  bool is_unit(Elem a) const override;
  Elem inverse(Elem a) const override;
  std::string to_string(Elem a) const override;
  std::optional<Elem> named_constant(std::string_view name) const override;

  const LocalRingPresentation& presentation() const { return p_; }
  const ChainRing& base() const { return *p_.base; }
  std::size_t gamma() const { return p_.ann.size(); }
  // Reduced coordinates: u_j is the canonical representative modulo p^ann[j].
  std::vector<Elem> coords(Elem a) const;
  Elem from_coords(const std::vector<Elem>& u) const;
  Elem embed(Elem base_elem) const;
  Elem basis(std::size_t j) const;

 private:
  std::vector<Elem> mul_coords(const std::vector<Elem>& a, const std::vector<Elem>& b) const;

  LocalRingPresentation p_;
  // reps_[j]: canonical residues of R0 modulo p^ann[j], sorted by code; index_[j] maps codes back
  std::vector<std::vector<Elem>> reps_;
  std::vector<std::vector<std::uint32_t>> index_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t size_ = 1;
  Elem one_{0};
  std::vector<std::uint32_t> table_;  // full multiplication table for small rings
};

using LocalRingPtr = std::shared_ptr<const LocalRing>;

// Z_{p^k}[X]/(f(X), p^t X) with f monic (coefficients lowest degree first),
// presented over Z_{p^s} with basis 1, X, ..., read off a strong Groebner basis.
LocalRingPtr quotient_local_ring(std::uint64_t p, unsigned k, const std::vector<std::int64_t>& f, unsigned t);

// System over the base ring in the variables x_{i,j}, equivalent to the
// input under x_i = sum_j x_{i,j} t_j.
struct ExpandedSystem {
  PolyContextPtr context;
  std::vector<MultiPoly> equations;
  std::size_t original_vars = 0;
  std::size_t gamma = 0;
};
ExpandedSystem expand_system(const std::vector<MultiPoly>& F);

// Compose x_i from its coordinates and deduplicate.
SolutionSet contract_solutions(const PolyContextPtr& original, const ExpandedSystem& E, const SolutionSet& sols,
                               std::size_t cap = std::size_t{1} << 16);

enum class SolveMethod { Elimination, Lifting };

// Expand, solve over the base ring, contract.
SolutionSet solve_local(const std::vector<MultiPoly>& F, SolveMethod method = SolveMethod::Elimination,
                        const SolveOptions& opts = {});

}  // namespace chainring

#endif
