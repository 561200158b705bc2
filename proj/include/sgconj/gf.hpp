#ifndef SGCONJ_GF_HPP
#define SGCONJ_GF_HPP

// Finite fields F_q for q = p^e <= 64, with full arithmetic tables.
//
// Elements are codes in [0, q): the base-p digits of a code are the
// coefficients of the residue polynomial (digit i = coefficient of x^i).
// For prime q this is plain arithmetic mod p. For prime powers the residue
// ring is taken modulo a fixed irreducible shipped below, so codes are
// stable across runs and the JSON encoding of matrix entries is portable.

#include <cstdint>
#include <vector>

#include "sgconj/errors.hpp"

namespace sgconj {

class GfField {
 public:
  using Elem = std::uint8_t;

  // Shared per-q instance; throws DomainError unless q is a prime power <= 64.
  static const GfField& get(long q);

  long q() const noexcept { return q_; }
  long p() const noexcept { return p_; }
  int ext_degree() const noexcept { return e_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  bool eq(Elem a, Elem b) const noexcept { return a == b; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem inv(Elem a) const {
    if (a == 0) throw_domain("division by zero in F_" + std::to_string(q_));
    return inv_[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Embeds an integer through the prime subfield.
  Elem from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  long multiplicative_order(Elem a) const;

 private:
  explicit GfField(long q);
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * q_ + b; }

  long q_, p_;
  int e_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

using GfElem = GfField::Elem;

}  // namespace sgconj

#endif
