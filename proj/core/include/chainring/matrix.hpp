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

#ifndef CHAINRING_MATRIX_HPP
#define CHAINRING_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainring/ring.hpp"

namespace chainring {

// Dense matrix over a ring, row-major.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static RingMatrix identity(RingPtr ring, std::size_t n);
  static RingMatrix from_ints(RingPtr ring, const std::vector<std::vector<std::int64_t>>& rows);
  static RingMatrix from_elems(RingPtr ring, const std::vector<std::vector<Elem>>& rows);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::vector<Elem> row(std::size_t i) const;
  std::vector<Elem> col(std::size_t j) const;

  RingMatrix transpose() const;
  RingMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  RingMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  RingMatrix scale(Elem c) const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;        // A v
  std::vector<Elem> apply_left(const std::vector<Elem>& v) const;   // v A
  bool is_zero() const;
  std::string to_string() const;

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

  static RingMatrix hstack(const std::vector<RingMatrix>& parts);
  static RingMatrix vstack(const std::vector<RingMatrix>& parts);

  // Componentwise view over a product ring.
  std::vector<RingMatrix> crt_split() const;
  static RingMatrix crt_join(RingPtr ring, const std::vector<RingMatrix>& parts);

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

// A = U D V with U, V invertible and D diagonal with entries p^e_i,
// e_0 <= e_1 <= ...; U_inv and V_inv are the inverses.
struct SmithDecomposition {
  RingMatrix U, D, V, U_inv, V_inv;
  std::size_t rank = 0;
  std::vector<unsigned> exponents;  // valuations of the nonzero diagonal entries
};
SmithDecomposition smith_form(const RingMatrix& A);

// A = P T with P invertible and T in row echelon form; pivots are p^v and
// the entries above each pivot are reduced modulo it.
struct HermiteDecomposition {
  RingMatrix P, T;
  std::vector<std::size_t> pivot_cols;
};
HermiteDecomposition hermite_form(const RingMatrix& A);

// Minimal number of generators of the row space; over a product ring the
// maximum over the components.
std::size_t rank(const RingMatrix& A);
std::vector<std::size_t> component_ranks(const RingMatrix& A);

// Columns generating {u : A u = 0}.
RingMatrix kernel(const RingMatrix& A);
// One solution of A u = b, if any.
std::optional<std::vector<Elem>> solve_linear(const RingMatrix& A, const std::vector<Elem>& b);
// One solution of x B = y, if any.
std::optional<std::vector<Elem>> solve_left(const RingMatrix& B, const std::vector<Elem>& y);
// Every solution of A u = b, sorted; throws TooLarge beyond the limit.
std::vector<std::vector<Elem>> all_solutions(const RingMatrix& A, const std::vector<Elem>& b,
                                             std::size_t limit = std::size_t{1} << 16);
bool in_row_space(const RingMatrix& B, const std::vector<Elem>& y);

// r x n matrix whose rows form a basis of a free module containing row(A).
RingMatrix free_envelope(const RingMatrix& A, std::size_t r);
// Z with y Z = 0 exactly for y in the row space of the free matrix B.
RingMatrix parity_check(const RingMatrix& B);

// Z = P (I ; Z') Q with P a permutation matrix and Q invertible.
struct StandardForm {
  RingMatrix P, Zprime, Q;
  std::vector<std::size_t> row_order;  // row i of (I ; Z') lands in row row_order[i] of Z
};
StandardForm standard_form(const RingMatrix& Z);

Elem determinant(const RingMatrix& A);

}  // namespace chainring

#endif
