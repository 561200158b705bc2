#ifndef SGCONJ_SEMIGROUP_HPP
#define SGCONJ_SEMIGROUP_HPP

// Finite semigroups as immutable multiplication tables, optionally carrying
// the concrete forms (transformations, partial injections, matrices over F_q)
// the elements were closed from. All member functions are pure and safe to
// call concurrently on a shared instance.

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "sgconj/errors.hpp"
#include "sgconj/gf.hpp"
#include "sgconj/maps.hpp"
#include "sgconj/matrix.hpp"

namespace sgconj {

using ElementId = int;
using GfMat = Mat<GfField>;

struct IndexPeriod {
  long index;   // smallest i >= 1 with s^i = s^{i+period}
  long period;  // smallest p >= 1 achieving that repeat
};

struct RegularModulus {
  long n;                           // lcm of the p-regular group element orders
  std::vector<ElementId> elements;  // the p-regular group elements, ascending
};

struct Provenance {
  // One concrete form per element, in element order.
  std::variant<std::vector<Transformation>, std::vector<PartialInjection>,
               std::vector<GfMat>>
      elements;
  // Generator word that first produced each element (indices into
  // `generators`), in breadth-first discovery order.
  std::vector<std::vector<int>> words;
  std::vector<ElementId> generators;
};

enum class AssocCheck {
  Auto,  // full scan up to 512 elements, spot checks above
  Full,
  Spot,
};

inline constexpr int kDefaultClosureCap = 10000;

class Semigroup {
 public:
  static Semigroup from_table(const std::vector<std::vector<int>>& table,
                              AssocCheck mode = AssocCheck::Auto);

  int size() const noexcept { return n_; }

  ElementId product(ElementId a, ElementId b) const {
    check_id(a);
    check_id(b);
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }

  bool is_idempotent(ElementId s) const { return product(s, s) == s; }

  // s^k for k >= 1; reduces k through the eventual cycle of s, so k may
  // vastly exceed |S|.
  ElementId power(ElementId s, unsigned long long k) const;

  IndexPeriod index_period(ElementId s) const;

  // s^{omega+j}; j = 0 gives the idempotent power.
  ElementId omega_plus(ElementId s, unsigned long long j) const;

  bool is_group_element(ElementId s) const { return index_period(s).index == 1; }

  // Order of a group element g (smallest d >= 1 with g^d = g^omega).
  long group_element_order(ElementId g) const;

  // p = 0 or prime; the p-regular group elements and the lcm of their orders.
  RegularModulus regular_modulus(long p) const;

  // First failing triple (a, b, c), if any. `full` forces the cubic scan.
  std::optional<std::array<int, 3>> verify_associativity(bool full) const;

  const std::optional<Provenance>& provenance() const noexcept { return prov_; }

  const std::vector<int>& raw_table() const noexcept { return table_; }

 private:
  Semigroup(int n, std::vector<int> table, std::optional<Provenance> prov)
      : n_(n), table_(std::move(table)), prov_(std::move(prov)) {}

  void check_id(ElementId s) const {
    if (s < 0 || s >= n_) throw_domain("element id out of range");
  }

  friend struct SemigroupFactory;

  int n_;
  std::vector<int> table_;  // row major: table_[a*n+b] = a*b
  std::optional<Provenance> prov_;
};

using GeneratorSet = std::variant<std::vector<Transformation>,
                                  std::vector<PartialInjection>, std::vector<GfMat>>;

// Closure under the product in breadth-first word order (elements processed
// in discovery order, generators in input order), deterministic across runs.
Semigroup close_generators(const GeneratorSet& generators,
                           int cap = kDefaultClosureCap);

namespace detail {
// Associativity scan kernels; return the least failing triple by (a, b, c).
std::optional<std::array<int, 3>> assoc_violation_serial(
    const std::vector<int>& table, int n);
std::optional<std::array<int, 3>> assoc_violation_parallel(
    const std::vector<int>& table, int n);
}  // namespace detail

}  // namespace sgconj

#endif
