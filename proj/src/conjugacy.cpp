#include "sgconj/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace sgconj {

const char* failed_condition_name(FailedCondition c) {
  switch (c) {
    case FailedCondition::PowerJ: return "PowerJ";
    case FailedCondition::QCharEquiv: return "QCharEquiv";
    case FailedCondition::KCharEquiv: return "KCharEquiv";
  }
  return "?";
}

namespace {

// Shared witness search. The pair (x, x') must satisfy the mutual-inverse
// laws with x'x = s^omega and xx' = t^omega; the conjugation target is
// either t^{omega+1} itself (generalized conjugacy) or some t(p')^j with j
// in H. `targets` maps each admissible right-hand side to the least j, or
// holds the single target with j absent.
struct TargetSet {
  std::unordered_map<ElementId, long> by_element;
  bool with_exponent = false;
};

std::optional<Witness> witness_search(const Semigroup& S, ElementId s_omega,
                                      ElementId t_omega, ElementId conjugand,
                                      const TargetSet& targets,
                                      const GreenClasses* green, bool prune) {
  const int n = S.size();
  const int r_t = green ? green->r_of(t_omega) : -1;
  const int l_s = green ? green->l_of(s_omega) : -1;
  const int r_s = green ? green->r_of(s_omega) : -1;
  const int l_t = green ? green->l_of(t_omega) : -1;

  for (ElementId x = 0; x < n; ++x) {
    if (prune) {
      // x = x x' x = t^omega x = x s^omega, and x lies in R_{t^omega}
      // and L_{s^omega}; all are necessary, so the first hit is unchanged.
      if (green && (green->r_of(x) != r_t || green->l_of(x) != l_s)) continue;
      if (S.product(t_omega, x) != x || S.product(x, s_omega) != x) continue;
    }
    for (ElementId xp = 0; xp < n; ++xp) {
      if (prune) {
        if (green && (green->r_of(xp) != r_s || green->l_of(xp) != l_t)) continue;
        if (S.product(s_omega, xp) != xp || S.product(xp, t_omega) != xp) continue;
      }
      if (S.product(xp, x) != s_omega) continue;
      if (S.product(x, xp) != t_omega) continue;
      if (S.product(S.product(x, xp), x) != x) continue;
      if (S.product(S.product(xp, x), xp) != xp) continue;
      ElementId v = S.product(S.product(x, conjugand), xp);
      auto it = targets.by_element.find(v);
      if (it == targets.by_element.end()) continue;
      Witness w{x, xp, std::nullopt};
      if (targets.with_exponent) w.j = it->second;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> generalized_search(const Semigroup& S, ElementId s,
                                          ElementId t, const GreenClasses* green,
                                          bool prune) {
  TargetSet targets;
  targets.by_element.emplace(S.omega_plus(t, 1), 0);
  targets.with_exponent = false;
  return witness_search(S, S.omega_plus(s, 0), S.omega_plus(t, 0),
                        S.omega_plus(s, 1), targets, green, prune);
}

}  // namespace

std::optional<Witness> generalized_conjugates(const Semigroup& S, ElementId s,
                                              ElementId t,
                                              const SearchOptions& opts) {
  return generalized_search(S, s, t, nullptr, opts.prune);
}

namespace {

std::optional<Witness> char_search(const Semigroup& S, ElementId s, ElementId t,
                                   const GaloisSubgroup& h, ElementId sp,
                                   ElementId tp, const GreenClasses* green,
                                   bool prune) {
  TargetSet targets;
  targets.with_exponent = true;
  for (long j : h.members) {
    ElementId v = S.power(tp, static_cast<unsigned long long>(j));
    targets.by_element.emplace(v, j);  // keeps the least j per element
  }
  return witness_search(S, S.omega_plus(s, 0), S.omega_plus(t, 0), sp, targets,
                        green, prune);
}

std::vector<ElementId> all_p_prime_parts(const Semigroup& S, long p) {
  std::vector<ElementId> parts(S.size());
#pragma omp parallel for schedule(static) if (S.size() >= 256)
  for (ElementId e = 0; e < S.size(); ++e)
    parts[e] = p_regular_parts(S, e, p).p_prime_part;
  return parts;
}

}  // namespace

std::optional<Witness> char_equivalent(const Semigroup& S, ElementId s,
                                       ElementId t, const FieldSpec& field,
                                       const SearchOptions& opts) {
  long p = field.characteristic();
  GaloisSubgroup h = galois_subgroup(field, S.regular_modulus(p).n);
  ElementId sp = p_regular_parts(S, s, p).p_prime_part;
  ElementId tp = p_regular_parts(S, t, p).p_prime_part;
  return char_search(S, s, t, h, sp, tp, nullptr, opts.prune);
}

std::optional<Witness> q_character_equivalent(const Semigroup& S, ElementId s,
                                              ElementId t,
                                              const SearchOptions& opts) {
  return char_equivalent(S, s, t, FieldSpec::rationals(), opts);
}

namespace {

PowerJResult power_j_impl(const Semigroup& S, const GreenClasses& green,
                          ElementId s, ElementId t, bool paper_bound) {
  long bound;
  if (paper_bound) {
    bound = S.size();
  } else {
    IndexPeriod is = S.index_period(s);
    IndexPeriod it = S.index_period(t);
    bound = std::max(is.index, it.index) + std::lcm(is.period, it.period);
  }
  ElementId u = s, v = t;
  for (long k = 1; k <= bound; ++k) {
    if (!green.same_j(u, v)) return PowerJResult{false, k};
    u = S.product(u, s);
    v = S.product(v, t);
  }
  return PowerJResult{true, std::nullopt};
}

}  // namespace

PowerJResult power_j_condition(const Semigroup& S, const GreenClasses& green,
                               ElementId s, ElementId t,
                               const SearchOptions& opts) {
  return power_j_impl(S, green, s, t, opts.paper_bound);
}

PowerJResult power_j_condition(const Semigroup& S, ElementId s, ElementId t,
                               const SearchOptions& opts) {
  GreenClasses green = green_classes(S);
  return power_j_impl(S, green, s, t, opts.paper_bound);
}

DeciderContext::DeciderContext(const Semigroup& S, const FieldSpec& field,
                               const SearchOptions& opts)
    : S_(&S), field_(field), opts_(opts), green_(green_classes(S)) {
  k_setup_.p = field.characteristic();
  k_setup_.h = galois_subgroup(field, S.regular_modulus(k_setup_.p).n);
  k_setup_.p_prime = all_p_prime_parts(S, k_setup_.p);

  // Condition (2) is implied by condition (3) when the characteristic is 0
  // or prime to every maximal subgroup order (equivalently: the p-regular
  // modulus equals the full modulus, by Cauchy/Lagrange) and H is all of
  // Z_n^x, because then both conditions search over identical data.
  long n0 = S.regular_modulus(0).n;
  bool skip_q = (k_setup_.p == 0 || k_setup_.h.modulus == n0) &&
                k_setup_.h.is_full_unit_group();
  if (field.kind == FieldSpec::Kind::Rationals) skip_q = true;
  if (!skip_q) {
    CharSetup qs;
    qs.p = 0;
    qs.h = galois_subgroup(FieldSpec::rationals(), n0);
    qs.p_prime = all_p_prime_parts(S, 0);
    q_setup_ = std::move(qs);
  }
}

ConjugacyVerdict DeciderContext::decide(ElementId s, ElementId t) const {
  ConjugacyVerdict verdict;

  PowerJResult pj = power_j_impl(*S_, green_, s, t, opts_.paper_bound);
  if (!pj.ok) {
    long k = *pj.failing_k;
    verdict.failed_condition = FailedCondition::PowerJ;
    verdict.evidence.failing_k = k;
    verdict.evidence.j_class_s =
        green_.j_of(S_->power(s, static_cast<unsigned long long>(k)));
    verdict.evidence.j_class_t =
        green_.j_of(S_->power(t, static_cast<unsigned long long>(k)));
    verdict.evidence.note = "power " + std::to_string(k) +
                            " lands in different J-classes";
    return verdict;
  }

  if (q_setup_) {
    auto wq = char_search(*S_, s, t, q_setup_->h, q_setup_->p_prime[s],
                          q_setup_->p_prime[t], &green_, opts_.prune);
    if (!wq) {
      verdict.failed_condition = FailedCondition::QCharEquiv;
      verdict.evidence.modulus = q_setup_->h.modulus;
      verdict.evidence.note = "no witness pair for Q-character equivalence";
      return verdict;
    }
  }

  auto wk = char_search(*S_, s, t, k_setup_.h, k_setup_.p_prime[s],
                        k_setup_.p_prime[t], &green_, opts_.prune);
  if (!wk) {
    verdict.failed_condition = field_.kind == FieldSpec::Kind::Rationals
                                   ? FailedCondition::QCharEquiv
                                   : FailedCondition::KCharEquiv;
    verdict.evidence.modulus = k_setup_.h.modulus;
    verdict.evidence.note = "no witness pair for character equivalence over " +
                            field_.to_string();
    return verdict;
  }

  verdict.result = true;
  verdict.witness = *wk;
  verdict.evidence.modulus = k_setup_.h.modulus;
  return verdict;
}

std::optional<Witness> DeciderContext::char_equiv(ElementId s, ElementId t) const {
  return char_search(*S_, s, t, k_setup_.h, k_setup_.p_prime[s],
                     k_setup_.p_prime[t], &green_, opts_.prune);
}

std::optional<Witness> DeciderContext::generalized(ElementId s, ElementId t) const {
  return generalized_search(*S_, s, t, &green_, opts_.prune);
}

ConjugacyVerdict linear_conjugate(const Semigroup& S, ElementId s, ElementId t,
                                  const FieldSpec& field,
                                  const SearchOptions& opts) {
  DeciderContext ctx(S, field, opts);
  return ctx.decide(s, t);
}

namespace {

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

Partition partition_impl(const Semigroup& S, const FieldSpec& field,
                         const SearchOptions& opts, bool parallel) {
  const int n = S.size();
  DeciderContext ctx(S, field, opts);
  UnionFind uf(n);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const std::size_t block = 2048;
  std::vector<std::pair<int, int>> batch;
  std::vector<char> outcome;
  for (std::size_t pos = 0; pos < pairs.size(); pos += block) {
    std::size_t end = std::min(pairs.size(), pos + block);
    batch.clear();
    for (std::size_t k = pos; k < end; ++k) {
      auto [i, j] = pairs[k];
      if (uf.find(i) != uf.find(j)) batch.push_back(pairs[k]);
    }
    outcome.assign(batch.size(), 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t k = 0; k < batch.size(); ++k)
        outcome[k] = ctx.decide(batch[k].first, batch[k].second).result ? 1 : 0;
    } else {
      for (std::size_t k = 0; k < batch.size(); ++k)
        outcome[k] = ctx.decide(batch[k].first, batch[k].second).result ? 1 : 0;
    }
    for (std::size_t k = 0; k < batch.size(); ++k)
      if (outcome[k]) uf.unite(batch[k].first, batch[k].second);
  }

  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = uf.find(i);
  return Partition::from_class_of(labels);
}

}  // namespace

Partition conjugacy_partition(const Semigroup& S, const FieldSpec& field,
                              const SearchOptions& opts) {
  return partition_impl(S, field, opts, true);
}

Partition conjugacy_partition_serial(const Semigroup& S, const FieldSpec& field,
                                     const SearchOptions& opts) {
  return partition_impl(S, field, opts, false);
}

}  // namespace sgconj
