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

#include "chainring/upoly.hpp"

namespace chainring::upoly {

void trim(UPoly& f) {
  while (!f.empty() && f.back().code == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly add(const Ring& R, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = R.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const Ring& R, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = R.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly mul(const Ring& R, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (R.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = R.add(r[i + j], R.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

UPoly scale(const Ring& R, const UPoly& a, Elem c) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = R.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod_monic(const Ring& R, const UPoly& a, const UPoly& m) {
  if (m.empty() || m.back() != R.one()) throw DomainError("divisor must be monic");
  UPoly rem = a;
  trim(rem);
  const std::size_t dm = m.size() - 1;
  if (rem.size() <= dm) return {{}, rem};
  UPoly quo(rem.size() - dm, R.zero());
  for (std::size_t i = rem.size(); i-- > dm;) {
    Elem c = rem[i];
    if (R.is_zero(c)) continue;
    quo[i - dm] = c;
    for (std::size_t j = 0; j <= dm; ++j) rem[i - dm + j] = R.sub(rem[i - dm + j], R.mul(c, m[j]));
  }
  trim(rem);
  trim(quo);
  return {quo, rem};
}

UPoly mod_monic(const Ring& R, const UPoly& a, const UPoly& m) { return divmod_monic(R, a, m).second; }

UPoly mulmod(const Ring& R, const UPoly& a, const UPoly& b, const UPoly& m) {
  return mod_monic(R, mul(R, a, b), m);
}

UPoly powmod(const Ring& R, const UPoly& a, std::uint64_t e, const UPoly& m) {
  UPoly result = mod_monic(R, UPoly{R.one()}, m);
  UPoly base = mod_monic(R, a, m);
  while (e != 0) {
    if (e & 1u) result = mulmod(R, result, base, m);
    e >>= 1;
    if (e != 0) base = mulmod(R, base, base, m);
  }
  return result;
}

UPoly gcd_field(const Ring& R, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly bm = scale(R, b, R.inverse(b.back()));
    UPoly r = mod_monic(R, a, bm);
    a = std::move(bm);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(R, a, R.inverse(a.back()));
  return a;
}

Elem eval(const Ring& R, const UPoly& f, Elem x) {
  Elem acc = R.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = R.add(R.mul(acc, x), f[i]);
  return acc;
}

UPoly derivative(const Ring& R, const UPoly& f) {
  UPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(R.mul(R.from_int(static_cast<std::int64_t>(i)), f[i]));
  trim(d);
  return d;
}

bool is_irreducible_over_field(const Ring& F, const UPoly& f) {
  int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const std::uint64_t q = F.size();
  const UPoly x{F.zero(), F.one()};
  // x^(q^i) mod f for i = 0..d
  std::vector<UPoly> frob{mod_monic(F, x, f)};
  for (int i = 1; i <= d; ++i) frob.push_back(powmod(F, frob.back(), q, f));
  if (sub(F, frob[d], mod_monic(F, x, f)).size() != 0) return false;
  auto n = static_cast<unsigned>(d);
  for (unsigned l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool prime = true;
    for (unsigned t = 2; t * t <= l; ++t)
      if (l % t == 0) prime = false;
    if (!prime) continue;
    UPoly g = gcd_field(F, f, sub(F, frob[n / l], x));
    if (degree(g) != 0) return false;
  }
  return true;
}

}  // namespace chainring::upoly
