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

#include "chainring/extension.hpp"

#include <sstream>

#include "chainring/upoly.hpp"

namespace chainring {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// X has multiplicative order exactly n modulo the monic g over R.
bool x_has_order(const Ring& R, const upoly::UPoly& g, std::uint64_t n) {
  upoly::UPoly x{R.zero(), R.one()};
  upoly::UPoly one{R.one()};
  if (upoly::powmod(R, x, n, g) != one) return false;
  for (auto l : prime_factors(n))
    if (upoly::powmod(R, x, n / l, g) == one) return false;
  return true;
}

std::vector<Elem> residue_of(const ChainRing& R, const std::vector<Elem>& f) {
  std::vector<Elem> out;
  for (Elem c : f) out.push_back(R.to_residue(c));
  upoly::trim(out);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> subsets_of(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = r;
    while (i > 0 && s[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < r; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------- GaloisExtension

GaloisExtension::GaloisExtension(ChainRingPtr base, std::vector<Elem> modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (!base_) throw DomainError("missing base ring");
  if (base_->kind() != RingKind::IntegerMod && base_->kind() != RingKind::Galois)
    throw DomainError("extension base must be a Galois ring, got " + base_->describe());
  if (modulus_.size() < 2 || modulus_.back() != base_->one()) throw DomainError("extension modulus must be monic of positive degree");
  m_ = static_cast<unsigned>(modulus_.size() - 1);
  const std::uint64_t N = ipow(base_->residue_size(), m_) - 1;
  auto F = base_->residue_field();
  auto g = residue_of(*base_, modulus_);
  if (!upoly::is_irreducible_over_field(*F, g) || !x_has_order(*F, g, N))
    throw DomainError("extension modulus is not primitive modulo p");
  if (!x_has_order(*base_, modulus_, N)) throw DomainError("extension modulus does not divide X^(q^m-1) - 1");

  if (m_ == 1) {
    ring_ = base_;
    alpha_ = base_->neg(modulus_[0]);
  } else {
    ring_ = GaloisRing::create(base_, modulus_);
    alpha_ = static_cast<const GaloisRing&>(*ring_).generator();
  }
  const std::uint64_t q = base_->residue_size();
  Elem a_l = alpha_;  // alpha^(q^l)
  for (unsigned l = 0; l < m_; ++l) {
    RingMatrix S(base_, m_, m_);
    Elem pw = ring_->one();
    for (unsigned i = 0; i < m_; ++i) {
      auto c = coords(pw);
      for (unsigned j = 0; j < m_; ++j) S(j, i) = c[j];
      pw = ring_->mul(pw, a_l);
    }
    sigma_.push_back(std::move(S));
    a_l = ring_->pow(a_l, q);
  }
}

std::shared_ptr<const GaloisExtension> GaloisExtension::create(ChainRingPtr base, std::vector<Elem> modulus) {
  return std::make_shared<const GaloisExtension>(std::move(base), std::move(modulus));
}

std::vector<Elem> GaloisExtension::residue_modulus() const { return residue_of(*base_, modulus_); }

std::vector<Elem> GaloisExtension::coords(Elem x) const {
  if (m_ == 1) return {x};
  return static_cast<const GaloisRing&>(*ring_).coords(x);
}

Elem GaloisExtension::from_coords(const std::vector<Elem>& c) const {
  if (c.size() != m_) throw DomainError("coordinate vector has wrong length");
  if (m_ == 1) return c[0];
  return static_cast<const GaloisRing&>(*ring_).from_coords(c);
}

Elem GaloisExtension::embed(Elem r) const {
  std::vector<Elem> c(m_, base_->zero());
  c[0] = r;
  return from_coords(c);
}

std::size_t GaloisExtension::reduce_power(std::int64_t l) const {
  auto m = static_cast<std::int64_t>(m_);
  return static_cast<std::size_t>(((l % m) + m) % m);
}

Elem GaloisExtension::frobenius(Elem x, std::int64_t l) const {
  std::size_t k = reduce_power(l);
  if (k == 0) return x;
  return from_coords(sigma_[k].apply(coords(x)));
}

std::vector<Elem> GaloisExtension::frobenius(const std::vector<Elem>& v, std::int64_t l) const {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (Elem x : v) out.push_back(frobenius(x, l));
  return out;
}

std::string GaloisExtension::describe() const {
  std::ostringstream os;
  os << "Ext[" << base_->describe() << "](m=" << m_ << ";h=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << base_->to_string(modulus_[i]);
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- construction

std::vector<Elem> primitive_polynomial(const ChainRing& F, unsigned m) {
  if (m == 0) throw DomainError("extension degree must be positive");
  if (F.nilpotency() != 1) throw DomainError("primitive polynomials are searched over a field");
  const std::uint64_t q = F.size();
  const std::uint64_t N = ipow(q, m) - 1;
  const std::uint64_t count = ipow(q, m);
  for (std::uint64_t c = 0; c < count; ++c) {
    upoly::UPoly g(m + 1);
    std::uint64_t v = c;
    for (unsigned i = 0; i < m; ++i, v /= q) g[i] = F.element(v % q);
    g[m] = F.one();
    if (F.is_zero(g[0])) continue;
    if (!upoly::is_irreducible_over_field(F, g)) continue;
    if (x_has_order(F, g, N)) return g;
  }
  throw DomainError("no primitive polynomial found");  // unreachable for finite fields
}

ExtensionPtr build_extension(ChainRingPtr base, unsigned m) {
  if (!base) throw DomainError("missing base ring");
  auto F = base->residue_field();
  auto g = primitive_polynomial(*F, m);
  std::vector<Elem> h;
  if (m == 1) {
    Elem beta = base->teichmuller_rep(base->lift_residue(F->neg(g[0])));
    h = {base->neg(beta), base->one()};
  } else {
    // h = prod_j (X - beta^(q^j)) with beta the Teichmuller lift of a root of g
    std::vector<Elem> gt;
    for (Elem c : g) gt.push_back(base->lift_residue(c));
    auto Sp = GaloisRing::create(base, gt);
    Elem beta = Sp->teichmuller_rep(Sp->generator());
    upoly::UPoly prod{Sp->one()};
    for (unsigned j = 0; j < m; ++j) {
      prod = upoly::mul(*Sp, prod, {Sp->neg(beta), Sp->one()});
      beta = Sp->pow(beta, base->residue_size());
    }
    for (Elem c : prod) {
      auto cc = Sp->coords(c);
      for (std::size_t i = 1; i < cc.size(); ++i)
        if (!base->is_zero(cc[i])) throw std::logic_error("Frobenius orbit product left the base ring");
      h.push_back(cc[0]);
    }
  }
  return GaloisExtension::create(std::move(base), std::move(h));
}

// ---------------------------------------------------------------- vectors

RingMatrix matrix_representation(const GaloisExtension& E, const std::vector<Elem>& u) {
  RingMatrix M(E.base_ptr(), E.degree(), u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    auto c = E.coords(u[j]);
    for (unsigned i = 0; i < E.degree(); ++i) M(i, j) = c[i];
  }
  return M;
}

std::size_t vector_rank(const GaloisExtension& E, const std::vector<Elem>& u) {
  if (u.empty()) return 0;
  return rank(matrix_representation(E, u));
}

std::vector<Elem> vector_support(const GaloisExtension& E, const std::vector<Elem>& u) {
  if (u.empty()) return {};
  auto sd = smith_form(matrix_representation(E, u));
  const ChainRing& R = E.base();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < sd.rank; ++i) {
    std::vector<Elem> c(E.degree());
    for (unsigned j = 0; j < E.degree(); ++j) c[j] = R.mul(sd.U(j, i), R.p_power(sd.exponents[i]));
    out.push_back(E.from_coords(c));
  }
  return out;
}

// ---------------------------------------------------------------- Plucker

PluckerCoordinates plucker_coordinates(const RingMatrix& B) {
  const Ring& R = B.ring();
  auto parts = R.is_chain() ? std::vector<RingMatrix>{B} : B.crt_split();
  for (const auto& part : parts) {
    auto sd = smith_form(part);
    bool free = sd.rank == B.rows();
    for (unsigned e : sd.exponents) free = free && e == 0;
    if (!free) throw NotFree("rows are not linearly independent");
  }
  PluckerCoordinates pc;
  pc.r = B.rows();
  std::vector<std::size_t> all_rows(B.rows());
  for (std::size_t i = 0; i < B.rows(); ++i) all_rows[i] = i;
  pc.subsets = subsets_of(B.cols(), B.rows());
  for (const auto& J : pc.subsets) pc.values.push_back(determinant(B.select(all_rows, J)));
  for (Elem v : pc.values)
    if (R.is_unit(v)) {
      Elem inv = R.inverse(v);
      for (auto& w : pc.values) w = R.mul(w, inv);
      break;
    }
  return pc;
}

}  // namespace chainring
