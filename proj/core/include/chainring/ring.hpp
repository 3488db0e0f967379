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

#ifndef CHAINRING_RING_HPP
#define CHAINRING_RING_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chainring/error.hpp"

namespace chainring {

// An element is an index into its ring; the ring carries all arithmetic.
// Codes run over 0..size()-1 and code 0 is always the zero element.
struct Elem {
  std::uint64_t code = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Ring;
class ChainRing;
using RingPtr = std::shared_ptr<const Ring>;
using ChainRingPtr = std::shared_ptr<const ChainRing>;

enum class RingKind { IntegerMod, Galois, Product, Local };

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  virtual RingKind kind() const = 0;
  virtual std::uint64_t size() const = 0;
  // Structural description; two rings are the same ring iff descriptions match.
  virtual std::string describe() const = 0;

  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem sub(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem from_int(std::int64_t n) const = 0;
  virtual bool is_unit(Elem a) const = 0;
  virtual Elem inverse(Elem a) const = 0;
  virtual std::string to_string(Elem a) const = 0;
  virtual bool is_chain() const { return false; }
  // Constant named in polynomial text, such as the generator a of a Galois ring.
  virtual std::optional<Elem> named_constant(std::string_view) const { return std::nullopt; }

  Elem zero() const { return {0}; }
  bool is_zero(Elem a) const { return a.code == 0; }
  Elem element(std::uint64_t index) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool same_as(const Ring& other) const { return describe() == other.describe(); }
  // Throws NotChainRing when the ring is not a chain ring.
  const ChainRing& as_chain() const;
  ChainRingPtr chain_ptr() const;
};

// Finite commutative chain ring with maximal ideal generated by p.
class ChainRing : public Ring {
 public:
  bool is_chain() const override { return true; }

  std::uint64_t prime() const { return p_; }
  unsigned nilpotency() const { return nu_; }
  std::uint64_t residue_size() const { return q_; }
  Elem pi() const { return from_int(static_cast<std::int64_t>(p_)); }
  Elem p_power(unsigned l) const;

  // val(0) = nilpotency().
  virtual unsigned valuation(Elem a) const = 0;
  // Exact division by p^l; requires valuation(a) >= l. Returns the
  // representative with the smallest coordinates.
  virtual Elem divide_by_p_power(Elem a, unsigned l) const = 0;
  // Canonical representative of a modulo p^e.
  virtual Elem reduce_mod_p_power(Elem a, unsigned e) const = 0;
  virtual ChainRingPtr residue_field() const = 0;
  // Image in residue_field().
  virtual Elem to_residue(Elem a) const = 0;
  // Canonical lift of a residue-field element.
  virtual Elem lift_residue(Elem r) const = 0;

  // a = p^val(a) * unit_part(a).
  Elem unit_part(Elem a) const;
  // num / den, defined when valuation(den) <= valuation(num).
  Elem quotient(Elem num, Elem den) const;

  // Teichmuller set {a : a^q = a}, ordered by code.
  const std::vector<Elem>& teichmuller() const { return gamma_; }
  Elem teichmuller_rep(Elem a) const { return gamma_by_residue_[to_residue(a).code]; }
  // Same set obtained by iterating a -> a^q from residue lifts.
  std::vector<Elem> teichmuller_by_iteration() const;

  // Digits c_j in the Teichmuller set with a = sum c_j pi^j.
  std::vector<Elem> pi_adic_digits(Elem a) const { return pi_adic_digits(a, pi()); }
  std::vector<Elem> pi_adic_digits(Elem a, Elem pi) const;
  Elem pi_adic_compose(const std::vector<Elem>& digits, Elem pi) const;

 protected:
  void init_chain(std::uint64_t p, unsigned nu, std::uint64_t q) {
    p_ = p;
    nu_ = nu;
    q_ = q;
  }
  // Call at the end of the most-derived constructor.
  void build_teichmuller();

 private:
  std::uint64_t p_ = 0;
  unsigned nu_ = 0;
  std::uint64_t q_ = 0;
  std::vector<Elem> gamma_;
  std::vector<Elem> gamma_by_residue_;
};

// Z / p^k.
class IntegerModRing final : public ChainRing {
 public:
  IntegerModRing(std::uint64_t p, unsigned k);
  static std::shared_ptr<const IntegerModRing> create(std::uint64_t p, unsigned k);

  RingKind kind() const override { return RingKind::IntegerMod; }
  std::uint64_t size() const override { return pk_; }
  std::string describe() const override;
  Elem one() const override { return {pk_ == 1 ? 0u : 1u}; }
  Elem add(Elem a, Elem b) const override;
  Elem sub(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  Elem from_int(std::int64_t n) const override;
  bool is_unit(Elem a) const override { return a.code % prime() != 0; }
  Elem inverse(Elem a) const override;
  std::string to_string(Elem a) const override { return std::to_string(a.code); }

  unsigned valuation(Elem a) const override;
  Elem divide_by_p_power(Elem a, unsigned l) const override;
  Elem reduce_mod_p_power(Elem a, unsigned e) const override;
  ChainRingPtr residue_field() const override;
  Elem to_residue(Elem a) const override { return {a.code % prime()}; }
  Elem lift_residue(Elem r) const override { return r; }

  std::uint64_t modulus() const { return pk_; }
  unsigned exponent() const { return nilpotency(); }

 private:
  std::uint64_t pk_;
  std::shared_ptr<const IntegerModRing> residue_;
};

// base[X]/(h) with h monic and irreducible modulo p: an unramified
// extension of a chain ring. Coordinates are in the basis 1, a, ..., a^{d-1}.
class GaloisRing final : public ChainRing {
 public:
  GaloisRing(ChainRingPtr base, std::vector<Elem> modulus);
  static std::shared_ptr<const GaloisRing> create(ChainRingPtr base, std::vector<Elem> modulus);
  // GR(p^k, r) given by an integer modulus polynomial, low degree first.
  static std::shared_ptr<const GaloisRing> create(std::uint64_t p, unsigned k,
                                                  const std::vector<std::int64_t>& modulus);

  RingKind kind() const override { return RingKind::Galois; }
  std::uint64_t size() const override { return size_; }
  std::string describe() const override;
  Elem one() const override;
  Elem add(Elem a, Elem b) const override;
  Elem sub(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  Elem from_int(std::int64_t n) const override;
  bool is_unit(Elem a) const override { return valuation(a) == 0; }
  Elem inverse(Elem a) const override;
  std::string to_string(Elem a) const override;

  unsigned valuation(Elem a) const override;
  Elem divide_by_p_power(Elem a, unsigned l) const override;
  Elem reduce_mod_p_power(Elem a, unsigned e) const override;
  ChainRingPtr residue_field() const override { return residue_ ? residue_ : chain_ptr(); }
  Elem to_residue(Elem a) const override;
  Elem lift_residue(Elem r) const override;

  const ChainRing& base() const { return *base_; }
  const ChainRingPtr& base_ptr() const { return base_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  const std::vector<Elem>& modulus() const { return modulus_; }
  std::vector<Elem> coords(Elem a) const;
  Elem from_coords(const std::vector<Elem>& c) const;
  Elem embed(Elem base_elem) const;
  Elem generator() const;
  std::optional<Elem> named_constant(std::string_view name) const override {
    return name == "a" ? std::optional<Elem>(generator()) : std::nullopt;
  }

 private:
  Elem mul_slow(Elem a, Elem b) const;

  ChainRingPtr base_;
  std::vector<Elem> modulus_;
  std::uint64_t bsize_;
  std::uint64_t size_;
  ChainRingPtr residue_;
  std::vector<std::uint32_t> table_;
};

// Explicit direct product of chain rings (a finite principal ideal ring).
class ProductRing final : public Ring {
 public:
  explicit ProductRing(std::vector<ChainRingPtr> components);
  static std::shared_ptr<const ProductRing> create(std::vector<ChainRingPtr> components);

  RingKind kind() const override { return RingKind::Product; }
  std::uint64_t size() const override { return size_; }
  std::string describe() const override;
  Elem one() const override;
  Elem add(Elem a, Elem b) const override;
  Elem sub(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  Elem from_int(std::int64_t n) const override;
  bool is_unit(Elem a) const override;
  Elem inverse(Elem a) const override;
  std::string to_string(Elem a) const override;

  const std::vector<ChainRingPtr>& components() const { return comps_; }
  std::vector<Elem> split(Elem a) const;
  Elem join(const std::vector<Elem>& parts) const;
  // n when this is Z/n presented through coprime prime powers.
  std::optional<std::uint64_t> integer_modulus() const { return int_mod_; }
  std::uint64_t to_integer(Elem a) const;

 private:
  std::vector<ChainRingPtr> comps_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t size_;
  std::optional<std::uint64_t> int_mod_;
};

// Z/n as a chain ring when n is a prime power, otherwise as a product.
RingPtr integers_mod(std::uint64_t n);
bool is_prime(std::uint64_t n);

// Value-semantics element bound to its ring.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPtr ring, Elem value) : ring_(std::move(ring)), value_(value) {}
  static RingElement from_int(RingPtr ring, std::int64_t n) {
    Elem v = ring->from_int(n);
    return {std::move(ring), v};
  }

  const RingPtr& ring() const { return ring_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_.code == 0; }
  bool is_unit() const { return ring_->is_unit(value_); }
  unsigned valuation() const { return ring_->as_chain().valuation(value_); }
  RingElement unit_part() const { return {ring_, ring_->as_chain().unit_part(value_)}; }
  RingElement inverse() const { return {ring_, ring_->inverse(value_)}; }
  RingElement pow(std::uint64_t e) const { return {ring_, ring_->pow(value_, e)}; }
  std::string to_string() const { return ring_->to_string(value_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a) { return {a.ring_, a.ring_->neg(a.value_)}; }
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingPtr ring_;
  Elem value_;
};

using PirElement = RingElement;

std::vector<RingElement> crt_split(const RingElement& x);
RingElement crt_join(const std::shared_ptr<const ProductRing>& ring,
                     const std::vector<RingElement>& parts);

}  // namespace chainring

template <>
struct std::hash<chainring::Elem> {
  std::size_t operator()(chainring::Elem e) const noexcept { return std::hash<std::uint64_t>{}(e.code); }
};

#endif
