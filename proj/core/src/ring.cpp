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

#include "chainring/ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "chainring/upoly.hpp"

namespace chainring {

namespace {

constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxRingSize / a) throw TooLarge("ring has more than 2^62 elements");
  return a * b;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Ring

Elem Ring::element(std::uint64_t index) const {
  if (index >= size()) throw DomainError("element index out of range for " + describe());
  return {index};
}

Elem Ring::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

const ChainRing& Ring::as_chain() const {
  auto* c = dynamic_cast<const ChainRing*>(this);
  if (c == nullptr) throw NotChainRing(describe() + " is not a chain ring");
  return *c;
}

ChainRingPtr Ring::chain_ptr() const {
  as_chain();
  return std::static_pointer_cast<const ChainRing>(shared_from_this());
}

// ---------------------------------------------------------------- ChainRing

Elem ChainRing::p_power(unsigned l) const {
  if (l >= nu_) return zero();
  return pow(pi(), l);
}

Elem ChainRing::unit_part(Elem a) const {
  if (is_zero(a)) throw ZeroElement("unit part of zero in " + describe());
  return divide_by_p_power(a, valuation(a));
}

Elem ChainRing::quotient(Elem num, Elem den) const {
  if (is_zero(den)) throw ZeroElement("division by zero in " + describe());
  if (is_zero(num)) return zero();
  unsigned vn = valuation(num);
  unsigned vd = valuation(den);
  if (vd > vn) throw DomainError("divisor has larger valuation than dividend");
  Elem c = mul(unit_part(num), inverse(unit_part(den)));
  return mul(c, p_power(vn - vd));
}

void ChainRing::build_teichmuller() {
  if (size() <= (std::uint64_t{1} << 16)) {
    for (std::uint64_t c = 0; c < size(); ++c) {
      Elem a{c};
      if (pow(a, q_) == a) gamma_.push_back(a);
    }
  } else {
    gamma_ = teichmuller_by_iteration();
  }
  if (gamma_.size() != q_) throw std::logic_error("Teichmuller set has wrong size in " + describe());
  gamma_by_residue_.assign(q_, Elem{});
  for (Elem g : gamma_) gamma_by_residue_[to_residue(g).code] = g;
}

std::vector<Elem> ChainRing::teichmuller_by_iteration() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (std::uint64_t r = 0; r < q_; ++r) {
    Elem a = lift_residue(Elem{r});
    for (unsigned i = 0; i <= nu_; ++i) {
      Elem b = pow(a, q_);
      if (b == a) break;
      a = b;
    }
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> ChainRing::pi_adic_digits(Elem a, Elem pi) const {
  if (nu_ == 1) {
    if (!is_zero(pi)) throw BadGenerator("the maximal ideal of a field is zero");
    return {a};
  }
  if (valuation(pi) != 1) throw BadGenerator(to_string(pi) + " does not generate the maximal ideal");
  Elem uinv = inverse(unit_part(pi));
  std::vector<Elem> digits;
  digits.reserve(nu_);
  Elem rem = a;
  for (unsigned j = 0; j < nu_; ++j) {
    Elem t = teichmuller_rep(rem);
    digits.push_back(t);
    if (j + 1 == nu_) break;
    rem = mul(divide_by_p_power(sub(rem, t), 1), uinv);
  }
  return digits;
}

Elem ChainRing::pi_adic_compose(const std::vector<Elem>& digits, Elem pi) const {
  Elem acc = zero();
  Elem pw = one();
  for (Elem d : digits) {
    acc = add(acc, mul(d, pw));
    pw = mul(pw, pi);
  }
  return acc;
}

// ---------------------------------------------------------------- Z/p^k

IntegerModRing::IntegerModRing(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("exponent must be positive");
  pk_ = ipow(p, k);
  init_chain(p, k, p);
  if (k > 1) residue_ = std::make_shared<const IntegerModRing>(p, 1);
  build_teichmuller();
}

std::shared_ptr<const IntegerModRing> IntegerModRing::create(std::uint64_t p, unsigned k) {
  return std::make_shared<const IntegerModRing>(p, k);
}

std::string IntegerModRing::describe() const { return "Z/" + std::to_string(pk_); }

Elem IntegerModRing::add(Elem a, Elem b) const {
  std::uint64_t s = a.code + b.code;
  return {s >= pk_ ? s - pk_ : s};
}

Elem IntegerModRing::sub(Elem a, Elem b) const {
  return {a.code >= b.code ? a.code - b.code : a.code + pk_ - b.code};
}

Elem IntegerModRing::neg(Elem a) const { return {a.code == 0 ? 0 : pk_ - a.code}; }

Elem IntegerModRing::mul(Elem a, Elem b) const {
  return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.code) * b.code % pk_)};
}

Elem IntegerModRing::from_int(std::int64_t n) const {
  auto m = static_cast<std::int64_t>(pk_);
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r)};
}

Elem IntegerModRing::inverse(Elem a) const {
  if (!is_unit(a)) throw NotAUnit(to_string(a) + " is not a unit in " + describe());
  std::int64_t r0 = static_cast<std::int64_t>(pk_), r1 = static_cast<std::int64_t>(a.code);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

unsigned IntegerModRing::valuation(Elem a) const {
  if (a.code == 0) return nilpotency();
  unsigned v = 0;
  std::uint64_t x = a.code;
  while (x % prime() == 0) {
    x /= prime();
    ++v;
  }
  return v;
}

Elem IntegerModRing::divide_by_p_power(Elem a, unsigned l) const {
  if (l >= nilpotency()) {
    if (a.code != 0) throw DomainError("element not divisible by p^" + std::to_string(l));
    return zero();
  }
  std::uint64_t pl = ipow(prime(), l);
  if (a.code % pl != 0) throw DomainError(to_string(a) + " not divisible by p^" + std::to_string(l));
  return {a.code / pl};
}

Elem IntegerModRing::reduce_mod_p_power(Elem a, unsigned e) const {
  if (e >= nilpotency()) return a;
  return {a.code % ipow(prime(), e)};
}

ChainRingPtr IntegerModRing::residue_field() const {
  if (residue_) return residue_;
  return chain_ptr();
}

// ---------------------------------------------------------------- Galois rings

GaloisRing::GaloisRing(ChainRingPtr base, std::vector<Elem> modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (!base_) throw DomainError("missing base ring");
  if (modulus_.size() < 2) throw DomainError("modulus must have positive degree");
  if (modulus_.back() != base_->one()) throw DomainError("modulus must be monic");
  for (Elem c : modulus_)
    if (c.code >= base_->size()) throw DomainError("modulus coefficient out of range");
  bsize_ = base_->size();
  size_ = ipow(bsize_, degree());
  init_chain(base_->prime(), base_->nilpotency(), ipow(base_->residue_size(), degree()));

  const auto F = base_->residue_field();
  upoly::UPoly hbar;
  for (Elem c : modulus_) hbar.push_back(base_->to_residue(c));
  if (!upoly::is_irreducible_over_field(*F, hbar))
    throw DomainError("modulus is not irreducible modulo p");
  if (base_->nilpotency() > 1) residue_ = std::make_shared<const GaloisRing>(F, hbar);

  if (size_ <= 512) {
    table_.resize(size_ * size_);
    for (std::uint64_t a = 0; a < size_; ++a)
      for (std::uint64_t b = a; b < size_; ++b) {
        auto v = static_cast<std::uint32_t>(mul_slow({a}, {b}).code);
        table_[a * size_ + b] = v;
        table_[b * size_ + a] = v;
      }
  }
  build_teichmuller();
}

std::shared_ptr<const GaloisRing> GaloisRing::create(ChainRingPtr base, std::vector<Elem> modulus) {
  return std::make_shared<const GaloisRing>(std::move(base), std::move(modulus));
}

std::shared_ptr<const GaloisRing> GaloisRing::create(std::uint64_t p, unsigned k,
                                                     const std::vector<std::int64_t>& modulus) {
  auto base = IntegerModRing::create(p, k);
  std::vector<Elem> m;
  for (auto c : modulus) m.push_back(base->from_int(c));
  return create(base, std::move(m));
}

std::string GaloisRing::describe() const {
  std::ostringstream os;
  os << "GR[" << base_->describe() << "](";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i].code;
  os << ")";
  return os.str();
}

std::vector<Elem> GaloisRing::coords(Elem a) const {
  std::vector<Elem> c(degree());
  std::uint64_t x = a.code;
  for (auto& ci : c) {
    ci = {x % bsize_};
    x /= bsize_;
  }
  return c;
}

Elem GaloisRing::from_coords(const std::vector<Elem>& c) const {
  if (c.size() != degree()) throw DomainError("coordinate vector has wrong length");
  std::uint64_t x = 0;
  for (std::size_t i = c.size(); i-- > 0;) x = x * bsize_ + c[i].code;
  return {x};
}

Elem GaloisRing::embed(Elem b) const { return {b.code}; }

Elem GaloisRing::generator() const {
  if (degree() == 1) return embed(base_->neg(modulus_[0]));
  return {bsize_};
}

Elem GaloisRing::one() const { return embed(base_->one()); }

Elem GaloisRing::add(Elem a, Elem b) const {
  auto x = coords(a), y = coords(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->add(x[i], y[i]);
  return from_coords(x);
}

Elem GaloisRing::sub(Elem a, Elem b) const {
  auto x = coords(a), y = coords(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->sub(x[i], y[i]);
  return from_coords(x);
}

Elem GaloisRing::neg(Elem a) const {
  auto x = coords(a);
  for (auto& c : x) c = base_->neg(c);
  return from_coords(x);
}

Elem GaloisRing::mul(Elem a, Elem b) const {
  if (!table_.empty()) return {table_[a.code * size_ + b.code]};
  return mul_slow(a, b);
}

Elem GaloisRing::mul_slow(Elem a, Elem b) const {
  const unsigned d = degree();
  auto x = coords(a), y = coords(b);
  std::vector<Elem> prod(2 * d - 1, base_->zero());
  for (unsigned i = 0; i < d; ++i) {
    if (base_->is_zero(x[i])) continue;
    for (unsigned j = 0; j < d; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(x[i], y[j]));
  }
  for (unsigned i = 2 * d - 1; i-- > d;) {
    Elem c = prod[i];
    if (base_->is_zero(c)) continue;
    for (unsigned j = 0; j < d; ++j) prod[i - d + j] = base_->sub(prod[i - d + j], base_->mul(c, modulus_[j]));
  }
  prod.resize(d);
  return from_coords(prod);
}

Elem GaloisRing::from_int(std::int64_t n) const { return embed(base_->from_int(n)); }

Elem GaloisRing::inverse(Elem a) const {
  if (!is_unit(a)) throw NotAUnit(to_string(a) + " is not a unit in " + describe());
  // Lagrange in the unit group, of order |R| - |R|/q.
  return pow(a, size_ - size_ / residue_size() - 1);
}

std::string GaloisRing::to_string(Elem a) const {
  auto c = coords(a);
  std::string out;
  bool nested = base_->kind() != RingKind::IntegerMod;
  for (unsigned i = 0; i < c.size(); ++i) {
    if (base_->is_zero(c[i])) continue;
    std::string coef = base_->to_string(c[i]);
    if (nested) coef = "(" + coef + ")";
    std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
    if (!out.empty()) out += "+";
    if (i == 0)
      out += coef;
    else if (c[i] == base_->one())
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

unsigned GaloisRing::valuation(Elem a) const {
  unsigned v = nilpotency();
  for (Elem c : coords(a)) v = std::min(v, base_->valuation(c));
  return v;
}

Elem GaloisRing::divide_by_p_power(Elem a, unsigned l) const {
  auto c = coords(a);
  for (auto& x : c) x = base_->divide_by_p_power(x, l);
  return from_coords(c);
}

Elem GaloisRing::reduce_mod_p_power(Elem a, unsigned e) const {
  auto c = coords(a);
  for (auto& x : c) x = base_->reduce_mod_p_power(x, e);
  return from_coords(c);
}

Elem GaloisRing::to_residue(Elem a) const {
  if (!residue_) return a;
  auto c = coords(a);
  for (auto& x : c) x = base_->to_residue(x);
  return static_cast<const GaloisRing&>(*residue_).from_coords(c);
}

Elem GaloisRing::lift_residue(Elem r) const {
  if (!residue_) return r;
  auto c = static_cast<const GaloisRing&>(*residue_).coords(r);
  for (auto& x : c) x = base_->lift_residue(x);
  return from_coords(c);
}

// ---------------------------------------------------------------- products

ProductRing::ProductRing(std::vector<ChainRingPtr> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw DomainError("product ring needs at least one component");
  size_ = 1;
  for (const auto& c : comps_) {
    if (!c) throw DomainError("missing component ring");
    radix_.push_back(size_);
    size_ = checked_mul(size_, c->size());
  }
  bool integer = true;
  std::vector<std::uint64_t> primes;
  std::uint64_t n = 1;
  for (const auto& c : comps_) {
    auto* z = dynamic_cast<const IntegerModRing*>(c.get());
    if (z == nullptr || std::find(primes.begin(), primes.end(), z->prime()) != primes.end()) {
      integer = false;
      break;
    }
    primes.push_back(z->prime());
    n *= z->modulus();
  }
  if (integer) int_mod_ = n;
}

std::shared_ptr<const ProductRing> ProductRing::create(std::vector<ChainRingPtr> components) {
  return std::make_shared<const ProductRing>(std::move(components));
}

std::string ProductRing::describe() const {
  std::string s = "Prod(";
  for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? "," : "") + comps_[i]->describe();
  return s + ")";
}

std::vector<Elem> ProductRing::split(Elem a) const {
  std::vector<Elem> parts(comps_.size());
  std::uint64_t x = a.code;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    parts[i] = {x % comps_[i]->size()};
    x /= comps_[i]->size();
  }
  return parts;
}

Elem ProductRing::join(const std::vector<Elem>& parts) const {
  if (parts.size() != comps_.size()) throw ComponentMismatch("wrong number of components");
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].code >= comps_[i]->size()) throw ComponentMismatch("component element out of range");
    x += parts[i].code * radix_[i];
  }
  return {x};
}

Elem ProductRing::one() const {
  std::vector<Elem> p;
  for (const auto& c : comps_) p.push_back(c->one());
  return join(p);
}

#define CHAINRING_COMPONENTWISE2(op)                                        \
  auto x = split(a), y = split(b);                                          \
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = comps_[i]->op(x[i], y[i]); \
  return join(x);

Elem ProductRing::add(Elem a, Elem b) const { CHAINRING_COMPONENTWISE2(add) }
Elem ProductRing::sub(Elem a, Elem b) const { CHAINRING_COMPONENTWISE2(sub) }
Elem ProductRing::mul(Elem a, Elem b) const { CHAINRING_COMPONENTWISE2(mul) }

#undef CHAINRING_COMPONENTWISE2

Elem ProductRing::neg(Elem a) const {
  auto x = split(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = comps_[i]->neg(x[i]);
  return join(x);
}

Elem ProductRing::from_int(std::int64_t n) const {
  std::vector<Elem> p;
  for (const auto& c : comps_) p.push_back(c->from_int(n));
  return join(p);
}

bool ProductRing::is_unit(Elem a) const {
  auto x = split(a);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!comps_[i]->is_unit(x[i])) return false;
  return true;
}

Elem ProductRing::inverse(Elem a) const {
  if (!is_unit(a)) throw NotAUnit(to_string(a) + " is not a unit in " + describe());
  auto x = split(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = comps_[i]->inverse(x[i]);
  return join(x);
}

std::uint64_t ProductRing::to_integer(Elem a) const {
  if (!int_mod_) throw DomainError(describe() + " is not presented as Z/n");
  auto parts = split(a);
  unsigned __int128 x = 0, m = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto mi = static_cast<const IntegerModRing&>(*comps_[i]).modulus();
    // Advance x by multiples of m until it matches the residue mod mi.
    while (static_cast<std::uint64_t>(x % mi) != parts[i].code) x += m;
    m *= mi;
  }
  return static_cast<std::uint64_t>(x);
}

std::string ProductRing::to_string(Elem a) const {
  if (int_mod_) return std::to_string(to_integer(a));
  auto parts = split(a);
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + comps_[i]->to_string(parts[i]);
  return s + ")";
}

RingPtr integers_mod(std::uint64_t n) {
  if (n < 2) throw DomainError("modulus must be at least 2");
  std::vector<ChainRingPtr> comps;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    unsigned k = 0;
    while (m % d == 0) {
      m /= d;
      ++k;
    }
    comps.push_back(IntegerModRing::create(d, k));
  }
  if (m > 1) comps.push_back(IntegerModRing::create(m, 1));
  if (comps.size() == 1) return comps.front();
  return ProductRing::create(std::move(comps));
}

// ---------------------------------------------------------------- RingElement

namespace {
void check_same(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring()))
    throw ComponentMismatch("operands belong to different rings");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  return {a.ring_, a.ring_->add(a.value_, b.value_)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  return {a.ring_, a.ring_->sub(a.value_, b.value_)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  return {a.ring_, a.ring_->mul(a.value_, b.value_)};
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  return a.value_ == b.value_;
}

std::vector<RingElement> crt_split(const RingElement& x) {
  auto prod = std::dynamic_pointer_cast<const ProductRing>(x.ring());
  if (!prod) return {x};
  auto parts = prod->split(x.value());
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < parts.size(); ++i) out.emplace_back(prod->components()[i], parts[i]);
  return out;
}

RingElement crt_join(const std::shared_ptr<const ProductRing>& ring, const std::vector<RingElement>& parts) {
  const auto& comps = ring->components();
  if (parts.size() != comps.size()) throw ComponentMismatch("wrong number of components");
  std::vector<Elem> v;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].ring()->same_as(*comps[i]))
      throw ComponentMismatch("component " + std::to_string(i) + " lies in " + parts[i].ring()->describe() +
                              ", expected " + comps[i]->describe());
    v.push_back(parts[i].value());
  }
  return {ring, ring->join(v)};
}

}  // namespace chainring
