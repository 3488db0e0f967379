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

#ifndef CHAINRING_TESTS_SUPPORT_HPP
#define CHAINRING_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "chainring/poly.hpp"

namespace testsupport {

using namespace chainring;

inline PolyContextPtr lex(RingPtr R, std::vector<std::string> vars) {
  return PolyContext::create(std::move(R), std::move(vars));
}

inline std::vector<MultiPoly> polys(const PolyContextPtr& ctx, const std::vector<std::string>& texts) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(ctx, t));
  return out;
}

inline std::vector<std::string> strings(const std::vector<MultiPoly>& F) {
  std::vector<std::string> out;
  for (const auto& f : F) out.push_back(f.to_string());
  return out;
}

// Random polynomial with at most `terms` terms and total degree <= deg.
inline MultiPoly random_poly(const PolyContextPtr& ctx, std::mt19937_64& rng, unsigned deg, unsigned terms) {
  const auto& R = ctx->ring();
  std::vector<Term> ts;
  std::uniform_int_distribution<std::uint64_t> coef(0, R.size() - 1);
  std::uniform_int_distribution<unsigned> e(0, deg);
  for (unsigned t = 0; t < terms; ++t) {
    Exponents ex(ctx->nvars(), 0);
    unsigned left = e(rng);
    for (std::size_t v = 0; v < ctx->nvars() && left > 0; ++v) {
      std::uniform_int_distribution<unsigned> part(0, left);
      ex[v] = (v + 1 == ctx->nvars()) ? left : part(rng);
      left -= ex[v];
    }
    ts.push_back({Elem{coef(rng)}, ex});
  }
  return MultiPoly::from_terms(ctx, std::move(ts));
}

}  // namespace testsupport

#endif
