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

#ifndef CHAINRING_SKEW_HPP
#define CHAINRING_SKEW_HPP

#include <string>
#include <vector>

#include "chainring/extension.hpp"

namespace chainring {

// a_0 + a_1 X + ... + a_k X^k in S[X; sigma], with X a = sigma(a) X.
class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(ExtensionPtr ext, std::vector<Elem> coeffs);
  static SkewPoly monomial(ExtensionPtr ext, Elem c, std::size_t degree);

  const ExtensionPtr& extension() const { return ext_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  Elem coeff(std::size_t i) const;
  std::string to_string() const;

  friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
  friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g);
  friend bool operator==(const SkewPoly& f, const SkewPoly& g) { return f.coeffs_ == g.coeffs_; }

 private:
  ExtensionPtr ext_;
  std::vector<Elem> coeffs_;
};

SkewPoly skew_multiply(const SkewPoly& f, const SkewPoly& g);
// f(x) = a_0 x + a_1 sigma(x) + ... + a_k sigma^k(x).
Elem evaluate(const SkewPoly& f, Elem x);
std::vector<Elem> evaluate(const SkewPoly& f, const std::vector<Elem>& u);

// Monic f of degree r with f(u) = 0, built on the canonical free envelope of
// the support of u. Throws RankExceeds when rk(u) > r.
SkewPoly annihilator(const ExtensionPtr& ext, const std::vector<Elem>& u, std::size_t r);

}  // namespace chainring

#endif
