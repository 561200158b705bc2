#ifndef SGCONJ_TESTS_HELPERS_HPP
#define SGCONJ_TESTS_HELPERS_HPP

// Independent brute-force oracles used by the unit and acceptance suites.
// Everything here stays deliberately naive: exhaustive searches straight
// from the definitions, no shortcuts shared with the library code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "sgconj/exactla.hpp"
#include "sgconj/maps.hpp"
#include "sgconj/partition.hpp"
#include "sgconj/semigroup.hpp"

namespace sgconj::testing {

// Partition of {0..n-1} from a symmetric pairwise predicate.
inline Partition partition_by(int n, const std::function<bool(int, int)>& related) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (find(i) != find(j) && related(i, j)) {
        int a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = find(i);
  return Partition::from_class_of(labels);
}

// Identity of a group table, or -1.
inline int group_identity(const Semigroup& S) {
  for (int e = 0; e < S.size(); ++e) {
    bool ok = true;
    for (int x = 0; x < S.size() && ok; ++x)
      ok = S.product(e, x) == x && S.product(x, e) == x;
    if (ok) return e;
  }
  return -1;
}

inline int group_inverse(const Semigroup& S, int e, int g) {
  for (int h = 0; h < S.size(); ++h)
    if (S.product(g, h) == e && S.product(h, g) == e) return h;
  return -1;
}

// Ordinary conjugacy classes of a group given by its table.
inline Partition group_conjugacy_partition(const Semigroup& S) {
  int e = group_identity(S);
  return partition_by(S.size(), [&](int a, int b) {
    for (int x = 0; x < S.size(); ++x) {
      int xi = group_inverse(S, e, x);
      if (S.product(S.product(x, a), xi) == b) return true;
    }
    return false;
  });
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline Transformation conjugate_by(const std::vector<int>& sigma,
                                   const Transformation& f) {
  int n = f.degree();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
  Transformation out;
  out.img.resize(n);
  for (int x = 0; x < n; ++x) out.img[x] = sigma[f.img[inv[x]]];
  return out;
}

inline PartialInjection conjugate_by(const std::vector<int>& sigma,
                                     const PartialInjection& f) {
  int n = f.degree();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
  PartialInjection out;
  out.img.assign(n, PartialInjection::kUndefined);
  for (int x = 0; x < n; ++x) {
    int pre = inv[x];
    if (f.defined(pre)) out.img[x] = sigma[f.img[pre]];
  }
  return out;
}

// sigma f = g sigma for some permutation sigma, by exhaustive search.
inline bool digraph_isomorphic_bruteforce(const Transformation& f,
                                          const Transformation& g) {
  for (const auto& sigma : all_permutations(f.degree()))
    if (conjugate_by(sigma, f) == g) return true;
  return false;
}

// Unpruned witness search for generalized conjugacy, straight from the
// definition (reference for the pruned search).
inline std::optional<std::pair<int, int>> naive_generalized_witness(
    const Semigroup& S, int s, int t) {
  int sw = S.omega_plus(s, 0), tw = S.omega_plus(t, 0);
  int s1 = S.omega_plus(s, 1), t1 = S.omega_plus(t, 1);
  for (int x = 0; x < S.size(); ++x)
    for (int xp = 0; xp < S.size(); ++xp) {
      if (S.product(S.product(x, xp), x) != x) continue;
      if (S.product(S.product(xp, x), xp) != xp) continue;
      if (S.product(xp, x) != sw) continue;
      if (S.product(x, xp) != tw) continue;
      if (S.product(S.product(x, s1), xp) != t1) continue;
      return std::make_pair(x, xp);
    }
  return std::nullopt;
}

inline Transformation random_transformation(int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> point(0, degree - 1);
  Transformation t;
  t.img.resize(degree);
  for (int i = 0; i < degree; ++i) t.img[i] = point(rng);
  return t;
}

inline Semigroup random_transformation_closure(int degree, int n_gens,
                                               unsigned seed,
                                               int cap = kDefaultClosureCap) {
  std::mt19937 rng(seed);
  std::vector<Transformation> gens;
  for (int i = 0; i < n_gens; ++i) gens.push_back(random_transformation(degree, rng));
  return close_generators(gens, cap);
}

// All n x n matrices over F_q, in code order.
inline std::vector<Mat<GfField>> all_gf_matrices(int n, long q) {
  const GfField& f = GfField::get(q);
  std::vector<Mat<GfField>> out;
  long total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  for (long code = 0; code < total; ++code) {
    Mat<GfField> m(f, n, n);
    long c = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = static_cast<GfElem>(c % q);
        c /= q;
      }
    out.push_back(std::move(m));
  }
  return out;
}

// GL_n(F_q)-conjugation orbits over the listed matrices.
inline Partition gl_conjugation_partition(const std::vector<Mat<GfField>>& mats) {
  int n = mats.front().rows;
  long q = mats.front().f->q();
  std::vector<Mat<GfField>> units;
  std::vector<Mat<GfField>> inverses;
  Mat<GfField> id = Mat<GfField>::identity(*mats.front().f, n);
  auto all = all_gf_matrices(n, q);
  for (const auto& p : all) {
    for (const auto& pi : all)
      if (p.mul(pi) == id && pi.mul(p) == id) {
        units.push_back(p);
        inverses.push_back(pi);
        break;
      }
  }
  return partition_by(static_cast<int>(mats.size()), [&](int a, int b) {
    for (std::size_t u = 0; u < units.size(); ++u)
      if (units[u].mul(mats[a]).mul(inverses[u]) == mats[b]) return true;
    return false;
  });
}

}  // namespace sgconj::testing

#endif
