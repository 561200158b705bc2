#include "sgconj/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "sgconj/numbers.hpp"

namespace sgconj {

namespace {

// Fixed irreducibles over F_p for the extension fields with q <= 64,
// coefficients low degree first, leading coefficient 1.
const std::vector<int>* shipped_modulus(long q) {
  static const std::map<long, std::vector<int>> table = {
      {4, {1, 1, 1}},           // x^2+x+1
      {8, {1, 1, 0, 1}},        // x^3+x+1
      {9, {1, 0, 1}},           // x^2+1
      {16, {1, 1, 0, 0, 1}},    // x^4+x+1
      {25, {1, 1, 1}},          // x^2+x+1
      {27, {1, 2, 0, 1}},       // x^3+2x+1
      {32, {1, 0, 1, 0, 0, 1}}, // x^5+x^2+1
      {49, {1, 0, 1}},          // x^2+1
      {64, {1, 1, 0, 0, 0, 0, 1}},  // x^6+x+1
  };
  auto it = table.find(q);
  return it == table.end() ? nullptr : &it->second;
}

std::vector<int> digits(long code, long p, int e) {
  std::vector<int> d(e, 0);
  for (int i = 0; i < e; ++i) {
    d[i] = static_cast<int>(code % p);
    code /= p;
  }
  return d;
}

long code_of(const std::vector<int>& d, long p) {
  long c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

}  // namespace

GfField::GfField(long q) : q_(q) {
  auto pe = prime_power_decompose(q);
  if (!pe || q > 64)
    throw_domain("F_" + std::to_string(q) + ": q must be a prime power <= 64");
  p_ = pe->first;
  e_ = pe->second;

  const std::vector<int>* mod = nullptr;
  if (e_ > 1) {
    mod = shipped_modulus(q);
    if (!mod) throw_domain("no shipped modulus for F_" + std::to_string(q));
  }

  add_.assign(static_cast<std::size_t>(q) * q, 0);
  mul_.assign(static_cast<std::size_t>(q) * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);

  for (long a = 0; a < q; ++a) {
    auto da = digits(a, p_, e_);
    std::vector<int> dn(e_);
    for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elem>(code_of(dn, p_));

    for (long b = 0; b < q; ++b) {
      auto db = digits(b, p_, e_);
      std::vector<int> ds(e_);
      for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] =
          static_cast<Elem>(code_of(ds, p_));

      // Polynomial product, reduced modulo the shipped irreducible.
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[i + j] = static_cast<int>((prod[i + j] + 1L * da[i] * db[j]) % p_);
      if (e_ > 1) {
        for (int d = static_cast<int>(prod.size()) - 1; d >= e_; --d) {
          int c = prod[d];
          if (c == 0) continue;
          prod[d] = 0;
          for (int i = 0; i < e_; ++i) {
            long t = prod[d - e_ + i] - 1L * c * (*mod)[i];
            prod[d - e_ + i] = static_cast<int>(((t % p_) + p_) % p_);
          }
        }
      }
      prod.resize(e_);
      mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] =
          static_cast<Elem>(code_of(prod, p_));
    }
  }

  // A reducible modulus would leave zero divisors; every nonzero element of a
  // field has an inverse, so this doubles as a construction self-check.
  for (long a = 1; a < q; ++a) {
    bool found = false;
    for (long b = 1; b < q; ++b) {
      if (mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 1) {
        inv_[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found)
      throw_domain("internal: shipped modulus for F_" + std::to_string(q) +
                   " is not irreducible");
  }
}

long GfField::multiplicative_order(Elem a) const {
  if (a == 0) throw_domain("multiplicative order of zero");
  long ord = 1;
  Elem x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

const GfField& GfField::get(long q) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<GfField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::unique_ptr<GfField>(new GfField(q))).first;
  return *it->second;
}

}  // namespace sgconj
