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

#ifndef CHAINRING_EXTENSION_HPP
#define CHAINRING_EXTENSION_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "chainring/matrix.hpp"
#include "chainring/ring.hpp"

namespace chainring {

// S = R[X]/(h) with h a monic lift of a primitive polynomial dividing
// X^(q^m - 1) - 1, and Frobenius sigma: alpha -> alpha^q.
class GaloisExtension {
 public:
  GaloisExtension(ChainRingPtr base, std::vector<Elem> modulus);
  static std::shared_ptr<const GaloisExtension> create(ChainRingPtr base, std::vector<Elem> modulus);

  const ChainRing& base() const { return *base_; }
  const ChainRingPtr& base_ptr() const { return base_; }
  // For m = 1 this is the base ring itself.
  const ChainRing& ring() const { return *ring_; }
  const ChainRingPtr& ring_ptr() const { return ring_; }
  unsigned degree() const { return m_; }
  // h, constant term first.
  const std::vector<Elem>& modulus() const { return modulus_; }
  // h reduced to the residue field of the base.
  std::vector<Elem> residue_modulus() const;
  Elem alpha() const { return alpha_; }

  std::vector<Elem> coords(Elem x) const;
  Elem from_coords(const std::vector<Elem>& c) const;
  Elem embed(Elem r) const;

  // sigma^l(x); l is taken modulo m, negative l allowed.
  Elem frobenius(Elem x, std::int64_t l = 1) const;
  std::vector<Elem> frobenius(const std::vector<Elem>& v, std::int64_t l = 1) const;
  // m x m matrix over R whose column i holds the coordinates of sigma^l(alpha^i).
  const RingMatrix& sigma_matrix(std::int64_t l) const { return sigma_[reduce_power(l)]; }

  std::string describe() const;

 private:
  std::size_t reduce_power(std::int64_t l) const;

  ChainRingPtr base_;
  std::vector<Elem> modulus_;
  unsigned m_;
  ChainRingPtr ring_;
  Elem alpha_;
  std::vector<RingMatrix> sigma_;
};

using ExtensionPtr = std::shared_ptr<const GaloisExtension>;

// Smallest monic primitive polynomial of degree m over the finite field F,
// comparing coefficient vectors from the top degree down.
std::vector<Elem> primitive_polynomial(const ChainRing& F, unsigned m);
// Degree-m extension from the smallest primitive polynomial over the residue field.
ExtensionPtr build_extension(ChainRingPtr base, unsigned m);

// m x n matrix over R; column j holds the coordinates of u_j.
RingMatrix matrix_representation(const GaloisExtension& E, const std::vector<Elem>& u);
std::size_t vector_rank(const GaloisExtension& E, const std::vector<Elem>& u);
// Generators p^e_i w_i of the R-module spanned by the entries, read off a Smith form.
std::vector<Elem> vector_support(const GaloisExtension& E, const std::vector<Elem>& u);

struct PluckerCoordinates {
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> subsets;  // increasing column sets, lex order
  std::vector<Elem> values;
};
// All r x r minors of B (r x n, free rows), scaled so the first unit minor is 1.
PluckerCoordinates plucker_coordinates(const RingMatrix& B);
// r-subsets of {0..n-1} in lex order.
std::vector<std::vector<std::size_t>> subsets_of(std::size_t n, std::size_t r);

}  // namespace chainring

#endif
