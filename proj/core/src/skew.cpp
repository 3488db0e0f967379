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

#include "chainring/skew.hpp"

#include <stdexcept>

namespace chainring {

SkewPoly::SkewPoly(ExtensionPtr ext, std::vector<Elem> coeffs) : ext_(std::move(ext)), coeffs_(std::move(coeffs)) {
  if (!ext_) throw DomainError("skew polynomial without an extension");
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

SkewPoly SkewPoly::monomial(ExtensionPtr ext, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, Elem{0});
  v[degree] = c;
  return SkewPoly(std::move(ext), std::move(v));
}

bool SkewPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == ext_->ring().one(); }

Elem SkewPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }

std::string SkewPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  const Ring& S = ext_->ring();
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (S.is_zero(coeffs_[i])) continue;
    std::string c = S.to_string(coeffs_[i]);
    std::string mono = i == 0 ? "" : i == 1 ? "X" : "X^" + std::to_string(i);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    std::string term = mono.empty() ? c : c == "1" ? mono : c + "*" + mono;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

namespace {

void same_extension(const SkewPoly& f, const SkewPoly& g) {
  if (f.extension() != g.extension() && f.extension()->describe() != g.extension()->describe())
    throw DomainError("skew polynomials over different extensions");
}

}  // namespace

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
  same_extension(f, g);
  const Ring& S = f.extension()->ring();
  std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = S.add(f.coeff(i), g.coeff(i));
  return SkewPoly(f.extension(), std::move(c));
}

SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
  same_extension(f, g);
  const Ring& S = f.extension()->ring();
  std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = S.sub(f.coeff(i), g.coeff(i));
  return SkewPoly(f.extension(), std::move(c));
}

SkewPoly skew_multiply(const SkewPoly& f, const SkewPoly& g) {
  same_extension(f, g);
  if (f.is_zero() || g.is_zero()) return SkewPoly(f.extension(), {});
  const auto& E = *f.extension();
  const Ring& S = E.ring();
  std::vector<Elem> c(f.coeffs().size() + g.coeffs().size() - 1, Elem{0});
  // (a X^i)(b X^j) = a sigma^i(b) X^(i+j)
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (S.is_zero(f.coeffs()[i])) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j)
      c[i + j] = S.add(c[i + j], S.mul(f.coeffs()[i], E.frobenius(g.coeffs()[j], static_cast<std::int64_t>(i))));
  }
  return SkewPoly(f.extension(), std::move(c));
}

Elem evaluate(const SkewPoly& f, Elem x) {
  const auto& E = *f.extension();
  const Ring& S = E.ring();
  Elem acc = S.zero();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    acc = S.add(acc, S.mul(f.coeffs()[i], E.frobenius(x, static_cast<std::int64_t>(i))));
  return acc;
}

std::vector<Elem> evaluate(const SkewPoly& f, const std::vector<Elem>& u) {
  std::vector<Elem> out;
  out.reserve(u.size());
  for (Elem x : u) out.push_back(evaluate(f, x));
  return out;
}

SkewPoly annihilator(const ExtensionPtr& ext, const std::vector<Elem>& u, std::size_t r) {
  const auto& E = *ext;
  const Ring& S = E.ring();
  std::size_t rk = vector_rank(E, u);
  if (rk > r)
    throw RankExceeds("vector has rank " + std::to_string(rk) + " > " + std::to_string(r) +
                      "; no monic annihilator of that degree exists");
  const std::size_t m = E.degree();
  const std::size_t d = std::min(r, m);
  SkewPoly f(ext, {S.one()});
  if (d > 0) {
    RingMatrix env = free_envelope(matrix_representation(E, u).transpose(), d);
    for (std::size_t i = 0; i < d; ++i) {
      Elem v = evaluate(f, E.from_coords(env.row(i)));
      // the envelope basis stays independent modulo p, so v is a unit
      if (!S.is_unit(v)) throw std::logic_error("annihilator step produced a non-unit");
      Elem c = S.mul(E.frobenius(v), S.inverse(v));
      f = skew_multiply(SkewPoly(ext, {S.neg(c), S.one()}), f);
    }
  }
  // degree beyond m: X^(r-m) f still kills u
  if (r > d) f = skew_multiply(SkewPoly::monomial(ext, S.one(), r - d), f);
  return f;
}

}  // namespace chainring
