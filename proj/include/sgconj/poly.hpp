#ifndef SGCONJ_POLY_HPP
#define SGCONJ_POLY_HPP

// Univariate polynomials over an exact field object, low degree first.
// Zero is the empty coefficient vector; otherwise the leading coefficient
// is nonzero.

#include <string>
#include <utility>
#include <vector>

#include "sgconj/errors.hpp"

namespace sgconj {

template <class F>
struct Poly {
  using Elem = typename F::Elem;

  const F* f = nullptr;
  std::vector<Elem> c;

  Poly() = default;
  explicit Poly(const F& field) : f(&field) {}
  Poly(const F& field, std::vector<Elem> coeffs) : f(&field), c(std::move(coeffs)) {
    normalize();
  }

  void normalize() {
    while (!c.empty() && f->is_zero(c.back())) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  static Poly zero(const F& field) { return Poly(field); }
  static Poly one(const F& field) { return Poly(field, {field.one()}); }
  static Poly x(const F& field) { return Poly(field, {field.zero(), field.one()}); }

  const Elem& leading() const { return c.back(); }

  bool operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!f->eq(c[i], o.c[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly add(const Poly& o) const {
    Poly r(*f);
    r.c.resize(std::max(c.size(), o.c.size()), f->zero());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = f->add(r.c[i], o.c[i]);
    r.normalize();
    return r;
  }

  Poly sub(const Poly& o) const {
    Poly r(*f);
    r.c.resize(std::max(c.size(), o.c.size()), f->zero());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = f->sub(r.c[i], o.c[i]);
    r.normalize();
    return r;
  }

  Poly mul(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(*f);
    Poly r(*f);
    r.c.assign(c.size() + o.c.size() - 1, f->zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (f->is_zero(c[i])) continue;
      for (std::size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = f->add(r.c[i + j], f->mul(c[i], o.c[j]));
    }
    r.normalize();
    return r;
  }

  Poly scale(const Elem& s) const {
    Poly r(*f);
    r.c.reserve(c.size());
    for (const Elem& x : c) r.c.push_back(f->mul(x, s));
    r.normalize();
    return r;
  }

  // Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw_domain("polynomial division by zero");
    Poly q(*f), r = *this;
    if (r.degree() >= d.degree())
      q.c.assign(r.degree() - d.degree() + 1, f->zero());
    typename F::Elem lead_inv = f->inv(d.leading());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int shift = r.degree() - d.degree();
      Elem coef = f->mul(r.leading(), lead_inv);
      q.c[shift] = coef;
      for (std::size_t i = 0; i < d.c.size(); ++i)
        r.c[shift + i] = f->sub(r.c[shift + i], f->mul(coef, d.c[i]));
      r.normalize();
    }
    q.normalize();
    return {q, r};
  }

  Poly mod(const Poly& d) const { return divmod(d).second; }

  bool divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return other.mod(*this).is_zero();
  }

  Poly make_monic() const {
    if (is_zero()) return *this;
    return scale(f->inv(leading()));
  }
};

}  // namespace sgconj

#endif
