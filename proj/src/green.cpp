#include "sgconj/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sgconj {

namespace {

Bitset right_ideal_bits(const Semigroup& S, ElementId s) {
  const int n = S.size();
  Bitset b(n);
  b.set(s);
  for (int a = 0; a < n; ++a) b.set(S.product(s, a));
  return b;
}

Bitset left_ideal_bits(const Semigroup& S, ElementId s) {
  const int n = S.size();
  Bitset b(n);
  b.set(s);
  for (int a = 0; a < n; ++a) b.set(S.product(a, s));
  return b;
}

// S^1 s S^1 as the union of right ideals over the left ideal of s.
Bitset two_sided_ideal_bits(const Semigroup& S, ElementId s) {
  Bitset left = left_ideal_bits(S, s);
  Bitset out(S.size());
  for (std::size_t x = left.find_first(); x != Bitset::npos; x = left.find_next(x))
    out |= right_ideal_bits(S, static_cast<ElementId>(x));
  return out;
}

std::vector<ElementId> bits_to_ids(const Bitset& b) {
  std::vector<ElementId> out;
  for (std::size_t x = b.find_first(); x != Bitset::npos; x = b.find_next(x))
    out.push_back(static_cast<ElementId>(x));
  return out;
}

// First-appearance labels for equal bitsets, scanning elements ascending.
std::vector<int> label_by_value(const std::vector<Bitset>& sets, int* n_labels) {
  std::vector<int> label(sets.size());
  std::map<Bitset, int> ids;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    auto it = ids.find(sets[s]);
    if (it == ids.end()) it = ids.emplace(sets[s], static_cast<int>(ids.size())).first;
    label[s] = it->second;
  }
  *n_labels = static_cast<int>(ids.size());
  return label;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

PrincipalIdeals principal_ideals(const Semigroup& S, ElementId s) {
  PrincipalIdeals out;
  out.right = bits_to_ids(right_ideal_bits(S, s));
  out.left = bits_to_ids(left_ideal_bits(S, s));
  out.two_sided = bits_to_ids(two_sided_ideal_bits(S, s));
  return out;
}

bool j_equivalent(const Semigroup& S, ElementId s, ElementId t) {
  if (s == t) return true;
  return two_sided_ideal_bits(S, s) == two_sided_ideal_bits(S, t);
}

GreenClasses green_classes_impl(const Semigroup& S, bool parallel) {
  const int n = S.size();
  GreenClasses g;

  std::vector<Bitset> right(n), left(n);
#pragma omp parallel for schedule(static) if (parallel && n >= 64)
  for (int s = 0; s < n; ++s) {
    right[s] = right_ideal_bits(S, s);
    left[s] = left_ideal_bits(S, s);
  }

  g.r_ = label_by_value(right, &g.nr_);
  g.l_ = label_by_value(left, &g.nl_);

  g.h_.resize(n);
  {
    std::map<std::pair<int, int>, int> ids;
    for (int s = 0; s < n; ++s) {
      auto key = std::make_pair(g.r_[s], g.l_[s]);
      auto it = ids.find(key);
      if (it == ids.end()) it = ids.emplace(key, static_cast<int>(ids.size())).first;
      g.h_[s] = it->second;
    }
    g.nh_ = static_cast<int>(ids.size());
  }

  // Candidate J-classes: join of the R and L partitions.
  UnionFind uf(n);
  {
    std::vector<int> first_r(g.nr_, -1), first_l(g.nl_, -1);
    for (int s = 0; s < n; ++s) {
      if (first_r[g.r_[s]] < 0)
        first_r[g.r_[s]] = s;
      else
        uf.unite(first_r[g.r_[s]], s);
      if (first_l[g.l_[s]] < 0)
        first_l[g.l_[s]] = s;
      else
        uf.unite(first_l[g.l_[s]], s);
    }
  }

  std::vector<int> reps;  // ascending = first appearance order
  std::vector<int> comp_of(n, -1);
  for (int s = 0; s < n; ++s) {
    int root = uf.find(s);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<int>(reps.size());
      reps.push_back(root);
    }
  }

  // Two-sided ideal of each candidate's representative, as the union of
  // right ideals over its left ideal.
  std::vector<Bitset> rep_ideal(reps.size());
#pragma omp parallel for schedule(dynamic) if (parallel && reps.size() >= 8)
  for (std::size_t c = 0; c < reps.size(); ++c) {
    Bitset out(n);
    const Bitset& lft = left[reps[c]];
    for (std::size_t x = lft.find_first(); x != Bitset::npos; x = lft.find_next(x))
      out |= right[x];
    rep_ideal[c] = std::move(out);
  }

  // Candidates with equal ideals are the same J-class.
  std::vector<int> comp_label(reps.size());
  int ncomp;
  {
    std::vector<int> merged = label_by_value(rep_ideal, &ncomp);
    comp_label = std::move(merged);
  }

  g.j_.resize(n);
  for (int s = 0; s < n; ++s) g.j_[s] = comp_label[comp_of[uf.find(s)]];
  // Relabel by first appearance over elements.
  {
    std::vector<int> remap(ncomp, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
      if (remap[g.j_[s]] < 0) remap[g.j_[s]] = next++;
      g.j_[s] = remap[g.j_[s]];
    }
    g.nj_ = next;
    std::vector<Bitset> ideal_of_label(g.nj_);
    for (std::size_t c = 0; c < reps.size(); ++c)
      ideal_of_label[remap[comp_label[c]]] = rep_ideal[c];
    g.j_leq_.assign(g.nj_, Bitset(g.nj_));
    for (int a = 0; a < g.nj_; ++a)
      for (int b = 0; b < g.nj_; ++b)
        if (ideal_of_label[a].is_subset_of(ideal_of_label[b])) g.j_leq_[a].set(b);
  }

  return g;
}

GreenClasses green_classes(const Semigroup& S) { return green_classes_impl(S, true); }

GreenClasses green_classes_serial(const Semigroup& S) {
  return green_classes_impl(S, false);
}

std::vector<std::vector<ElementId>> GreenClasses::j_class_members() const {
  return classes_by_label(j_, nj_);
}

std::vector<std::vector<ElementId>> classes_by_label(const std::vector<int>& labels,
                                                     int n_labels) {
  std::vector<std::vector<ElementId>> out(n_labels);
  for (std::size_t s = 0; s < labels.size(); ++s)
    out[labels[s]].push_back(static_cast<ElementId>(s));
  return out;
}

namespace {

// eSe ∩ J_e is a group; verify rather than assume.
MaximalSubgroup finish_subgroup(const Semigroup& S, ElementId e,
                                std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  for (ElementId a : elements) {
    if (S.product(a, e) != a || S.product(e, a) != a)
      throw_domain("maximal subgroup verification failed: identity law");
    bool has_inverse = false;
    for (ElementId b : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), S.product(a, b)))
        throw_domain("maximal subgroup verification failed: not closed");
      if (S.product(a, b) == e && S.product(b, a) == e) has_inverse = true;
    }
    if (!has_inverse)
      throw_domain("maximal subgroup verification failed: missing inverse");
  }
  return MaximalSubgroup{e, std::move(elements)};
}

}  // namespace

MaximalSubgroup maximal_subgroup(const Semigroup& S, const GreenClasses& green,
                                 ElementId e) {
  if (!S.is_idempotent(e))
    throw_domain("maximal subgroup requires an idempotent identity");
  std::vector<ElementId> members;
  Bitset seen(S.size());
  for (int x = 0; x < S.size(); ++x) {
    ElementId exe = S.product(S.product(e, x), e);
    if (seen.test(exe)) continue;
    seen.set(exe);
    if (green.same_j(exe, e)) members.push_back(exe);
  }
  return finish_subgroup(S, e, std::move(members));
}

MaximalSubgroup maximal_subgroup(const Semigroup& S, ElementId e) {
  if (!S.is_idempotent(e))
    throw_domain("maximal subgroup requires an idempotent identity");
  std::vector<ElementId> members;
  Bitset ideal_e = two_sided_ideal_bits(S, e);
  Bitset seen(S.size());
  for (int x = 0; x < S.size(); ++x) {
    ElementId exe = S.product(S.product(e, x), e);
    if (seen.test(exe)) continue;
    seen.set(exe);
    if (two_sided_ideal_bits(S, exe) == ideal_e) members.push_back(exe);
  }
  return finish_subgroup(S, e, std::move(members));
}

}  // namespace sgconj
