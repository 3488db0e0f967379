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

#ifndef CHAINRING_RANKDECODE_HPP
#define CHAINRING_RANKDECODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "chainring/extension.hpp"
#include "chainring/groebner.hpp"
#include "chainring/minrank.hpp"

namespace chainring {

// Find c = xG with rk(y - c) <= r.
struct RankDecodingInstance {
  ExtensionPtr ext;
  std::vector<std::vector<Elem>> G;  // k x n over S
  std::vector<Elem> y;
  std::size_t r = 1;

  std::size_t k() const { return G.size(); }
  std::size_t n() const { return y.size(); }
  void validate() const;
};

std::vector<Elem> encode(const RankDecodingInstance& rd, const std::vector<Elem>& x);
// rk(y - xG) <= r.
bool is_decoding(const RankDecodingInstance& rd, const std::vector<Elem>& x);

// M_0 = rep(-y), then rep(alpha^u g_i) for i = 1..k, u = 0..m-1. A MinRank
// solution x_{i,u} recombines to x_i = sum_u x_{i,u} alpha^u.
MinRankInstance to_minrank(const RankDecodingInstance& rd);
std::vector<Elem> combine_coordinates(const RankDecodingInstance& rd, const std::vector<Elem>& xr);

// Support-Minors equations over S with the Plucker variables in R, expanded
// over R in the basis 1, alpha, ...; the z_J of unit_subset is fixed to 1.
// Variables: the remaining z_J, then the coordinates of x; lex, z above x.
ModelSystem sm_rd_model(const RankDecodingInstance& rd, std::size_t unit_subset = 0);

// Key equation sum_l z_l sigma^l(y) = sum_l z_l sigma^l(xG) with z_r = 1.
struct KeyEquationSystem {
  // n x (k+1)(r+1) over S acting on (z_0..z_{r-1}, z_0 x, ..., z_r sigma^r(x), z_r).
  RingMatrix linear;
  // Expansion over R: variables z~ = (z_{0,0}..z_{r-1,m-1}) then x~ = (x_{1,0}..x_{k,m-1}), lex.
  ModelSystem expansion;
  std::vector<std::size_t> z_vars;
  // (x~ (x) z~) A + x~ B + z~ C + D = 0, one column per expanded equation.
  RingMatrix A, B, C, D;
};
KeyEquationSystem key_equation_model(const RankDecodingInstance& rd);

// Hermite form of the linear system; reads x = -sigma^-r(b) off the block
// (I_k | b). Throws Inconclusive if the shape is absent or the answer fails
// the rank check.
struct KeyLinearization {
  HermiteDecomposition hermite;
  std::vector<Elem> x;
};
KeyLinearization solve_key_linearization(const RankDecodingInstance& rd);

struct KeyGroebnerOptions {
  bool field_equations = false;
  GroebnerOptions groebner;
};
// Every x solving the expanded key equation, each rank-checked.
std::vector<std::vector<Elem>> solve_key_groebner(const RankDecodingInstance& rd, const KeyGroebnerOptions& opts = {},
                                                  GroebnerBasis* basis = nullptr);

enum class DecodeStrategy { Auto, Linearization, SupportMinorsLinearization, SupportMinorsGroebner, Groebner, MinRank };
std::string to_string(DecodeStrategy s);
DecodeStrategy parse_decode_strategy(const std::string& s);

struct Decoding {
  std::vector<Elem> x, c, e;
};
struct DecodeResult {
  std::vector<Decoding> solutions;  // sorted by x
  DecodeStrategy strategy_used = DecodeStrategy::Auto;
};
// Auto tries linearization, linearized Support-Minors, Groebner expansion and
// Kipnis-Shamir in turn; the first strategy with a verified answer wins.
// Throws NoSolution when nothing is found.
DecodeResult decode(const RankDecodingInstance& rd, DecodeStrategy strategy = DecodeStrategy::Auto);

}  // namespace chainring

#endif
