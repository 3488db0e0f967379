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

#ifndef CHAINRING_UPOLY_HPP
#define CHAINRING_UPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "chainring/ring.hpp"

// Dense univariate polynomials over a ring, lowest degree first, no
// trailing zeros. Used for moduli, Hensel lifting and vanishing polynomials.
namespace chainring::upoly {

using UPoly = std::vector<Elem>;

void trim(UPoly& f);
int degree(const UPoly& f);
UPoly add(const Ring& R, const UPoly& a, const UPoly& b);
UPoly sub(const Ring& R, const UPoly& a, const UPoly& b);
UPoly mul(const Ring& R, const UPoly& a, const UPoly& b);
UPoly scale(const Ring& R, const UPoly& a, Elem c);
// Remainder modulo a monic polynomial.
UPoly mod_monic(const Ring& R, const UPoly& a, const UPoly& m);
std::pair<UPoly, UPoly> divmod_monic(const Ring& R, const UPoly& a, const UPoly& m);
UPoly mulmod(const Ring& R, const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const Ring& R, const UPoly& a, std::uint64_t e, const UPoly& m);
// Monic gcd; R must be a field.
UPoly gcd_field(const Ring& R, UPoly a, UPoly b);
Elem eval(const Ring& R, const UPoly& f, Elem x);
UPoly derivative(const Ring& R, const UPoly& f);
// Rabin's test over a finite field of size q.
bool is_irreducible_over_field(const Ring& F, const UPoly& f);

}  // namespace chainring::upoly

#endif
