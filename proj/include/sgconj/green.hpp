#ifndef SGCONJ_GREEN_HPP
#define SGCONJ_GREEN_HPP

// Green's relations, principal ideals, the J-order and maximal subgroups.
//
// One-sided ideals are computed per element directly from the definitions
// (a right ideal is a table row plus the element itself). Two-sided ideals
// use the identity  S^1 s S^1 = union of rightIdeal(x) over x in S^1 s,
// so the J relation is still decided purely by ideal equality: candidate
// classes come from joining R and L, and candidates whose representative
// ideals coincide are merged, so no structure theorem is assumed.

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "sgconj/semigroup.hpp"

namespace sgconj {

using Bitset = boost::dynamic_bitset<>;

struct PrincipalIdeals {
  std::vector<ElementId> right;      // {s} ∪ sS
  std::vector<ElementId> left;       // {s} ∪ Ss
  std::vector<ElementId> two_sided;  // {s} ∪ sS ∪ Ss ∪ SsS
};

PrincipalIdeals principal_ideals(const Semigroup& S, ElementId s);

bool j_equivalent(const Semigroup& S, ElementId s, ElementId t);

class GreenClasses {
 public:
  int n_r() const noexcept { return nr_; }
  int n_l() const noexcept { return nl_; }
  int n_j() const noexcept { return nj_; }
  int n_h() const noexcept { return nh_; }

  int r_of(ElementId s) const { return r_[s]; }
  int l_of(ElementId s) const { return l_[s]; }
  int j_of(ElementId s) const { return j_[s]; }
  int h_of(ElementId s) const { return h_[s]; }

  bool same_j(ElementId s, ElementId t) const { return j_[s] == j_[t]; }

  // Ideal containment order on J-class labels: a <= b iff the principal
  // two-sided ideal of class a is contained in that of class b.
  bool j_leq(int a, int b) const { return j_leq_[a][b]; }

  std::vector<std::vector<ElementId>> j_class_members() const;

 private:
  friend GreenClasses green_classes_impl(const Semigroup&, bool);

  std::vector<int> r_, l_, j_, h_;
  int nr_ = 0, nl_ = 0, nj_ = 0, nh_ = 0;
  std::vector<Bitset> j_leq_;  // j_leq_[a][b] == (a <= b)
};

GreenClasses green_classes(const Semigroup& S);
GreenClasses green_classes_serial(const Semigroup& S);

struct MaximalSubgroup {
  ElementId identity;
  std::vector<ElementId> elements;  // ascending, closed, a group with the given identity
};

MaximalSubgroup maximal_subgroup(const Semigroup& S, ElementId e);
MaximalSubgroup maximal_subgroup(const Semigroup& S, const GreenClasses& green,
                                 ElementId e);

// Grouping helper: members of each label, labels in input order.
std::vector<std::vector<ElementId>> classes_by_label(const std::vector<int>& labels,
                                                     int n_labels);

}  // namespace sgconj

#endif
