#include "sgconj/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "sgconj/numbers.hpp"

namespace sgconj {

namespace detail {

std::optional<std::array<int, 3>> assoc_violation_serial(
    const std::vector<int>& t, int n) {
  const auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = at(a, b);
      for (int c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c))) return std::array<int, 3>{a, b, c};
    }
  return std::nullopt;
}

std::optional<std::array<int, 3>> assoc_violation_parallel(
    const std::vector<int>& t, int n) {
  const auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  const std::int64_t none = std::numeric_limits<std::int64_t>::max();
  std::int64_t best = none;
#pragma omp parallel for schedule(dynamic) reduction(min : best) if (n >= 64)
  for (int a = 0; a < n; ++a) {
    std::int64_t local = none;
    for (int b = 0; b < n && local == none; ++b) {
      int ab = at(a, b);
      for (int c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c))) {
          local = (static_cast<std::int64_t>(a) * n + b) * n + c;
          break;
        }
    }
    best = std::min(best, local);
  }
  if (best == none) return std::nullopt;
  int c = static_cast<int>(best % n);
  int b = static_cast<int>((best / n) % n);
  int a = static_cast<int>(best / n / n);
  return std::array<int, 3>{a, b, c};
}

namespace {

// Deterministic sampled associativity check for large explicit tables.
std::optional<std::array<int, 3>> assoc_violation_spot(const std::vector<int>& t,
                                                       int n, int samples) {
  const auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::optional<std::array<int, 3>> worst;
  for (int i = 0; i < samples; ++i) {
    int a = static_cast<int>(next() % n);
    int b = static_cast<int>(next() % n);
    int c = static_cast<int>(next() % n);
    if (at(at(a, b), c) != at(a, at(b, c))) {
      std::array<int, 3> v{a, b, c};
      if (!worst || v < *worst) worst = v;
    }
  }
  return worst;
}

}  // namespace
}  // namespace detail

Semigroup Semigroup::from_table(const std::vector<std::vector<int>>& table,
                                AssocCheck mode) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw_format("empty multiplication table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw_format("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n)
        throw_format("table entry out of range [0, " + std::to_string(n) + ")");
      flat.push_back(v);
    }
  }

  bool full = mode == AssocCheck::Full || (mode == AssocCheck::Auto && n <= 512);
  std::optional<std::array<int, 3>> bad;
  if (full)
    bad = detail::assoc_violation_parallel(flat, n);
  else
    bad = detail::assoc_violation_spot(flat, n, 50 * n);
  if (bad)
    throw_format("table is not associative at (" + std::to_string((*bad)[0]) +
                 ", " + std::to_string((*bad)[1]) + ", " +
                 std::to_string((*bad)[2]) + ")");
  return Semigroup(n, std::move(flat), std::nullopt);
}

std::optional<std::array<int, 3>> Semigroup::verify_associativity(bool full) const {
  if (full) return detail::assoc_violation_parallel(table_, n_);
  return detail::assoc_violation_serial(table_, n_);
}

ElementId Semigroup::power(ElementId s, unsigned long long k) const {
  check_id(s);
  if (k == 0) throw_domain("element_power requires k >= 1");
  // Walk s, s^2, ... recording first-seen exponents until the sequence
  // repeats; powers beyond the index reduce modulo the period.
  std::vector<ElementId> seq;  // seq[e-1] = s^e
  std::vector<long> seen(n_, 0);
  ElementId cur = s;
  unsigned long long e = 1;
  while (true) {
    if (e == k) return cur;
    if (seen[cur] != 0) {
      long index = seen[cur];
      long period = static_cast<long>(e) - index;
      unsigned long long red =
          static_cast<unsigned long long>(index) +
          (k - static_cast<unsigned long long>(index)) % static_cast<unsigned long long>(period);
      return seq[red - 1];
    }
    seen[cur] = static_cast<long>(e);
    seq.push_back(cur);
    cur = product(cur, s);
    ++e;
  }
}

IndexPeriod Semigroup::index_period(ElementId s) const {
  check_id(s);
  std::vector<long> seen(n_, 0);
  ElementId cur = s;
  long e = 1;
  while (seen[cur] == 0) {
    seen[cur] = e;
    cur = product(cur, s);
    ++e;
  }
  long index = seen[cur];
  return IndexPeriod{index, e - index};
}

ElementId Semigroup::omega_plus(ElementId s, unsigned long long j) const {
  IndexPeriod ip = index_period(s);
  // Exponent of the idempotent power: the unique multiple of the period in
  // [index, index + period - 1].
  long e = ((ip.index + ip.period - 1) / ip.period) * ip.period;
  return power(s, static_cast<unsigned long long>(e) + j);
}

long Semigroup::group_element_order(ElementId g) const {
  IndexPeriod ip = index_period(g);
  if (ip.index != 1)
    throw_domain("element " + std::to_string(g) + " is not a group element");
  return ip.period;
}

RegularModulus Semigroup::regular_modulus(long p) const {
  if (p != 0 && !is_prime(p))
    throw_domain("characteristic must be 0 or prime, got " + std::to_string(p));
  RegularModulus out;
  out.n = 1;
  for (ElementId s = 0; s < n_; ++s) {
    IndexPeriod ip = index_period(s);
    if (ip.index != 1) continue;
    long order = ip.period;
    if (p != 0 && order % p == 0) continue;  // not p-regular
    out.elements.push_back(s);
    out.n = lcm_checked(out.n, order);
  }
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e37u;
    return h;
  }
};

std::vector<int> key_of(const Transformation& t) { return t.img; }
std::vector<int> key_of(const PartialInjection& t) { return t.img; }
std::vector<int> key_of(const GfMat& m) {
  std::vector<int> k;
  k.reserve(m.a.size() + 3);
  k.push_back(m.rows);
  k.push_back(m.cols);
  k.push_back(static_cast<int>(m.f->q()));
  for (auto e : m.a) k.push_back(e);
  return k;
}

void validate_generators(const std::vector<Transformation>& gens) {
  int deg = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != deg)
      throw_format("generators have mixed degrees");
    Transformation::checked(g.img);
  }
}

void validate_generators(const std::vector<PartialInjection>& gens) {
  int deg = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != deg)
      throw_format("generators have mixed degrees");
    PartialInjection::checked(g.img);
  }
}

void validate_generators(const std::vector<GfMat>& gens) {
  const GfMat& first = gens.front();
  if (first.rows != first.cols) throw_format("matrix generators must be square");
  for (const auto& g : gens) {
    if (g.rows != first.rows || g.cols != first.cols || g.f != first.f)
      throw_format("matrix generators have mixed dimensions or fields");
    for (auto e : g.a)
      if (e >= g.f->q()) throw_format("matrix entry is not an F_q element code");
  }
}

template <class E>
E mul_forms(const E& a, const E& b) {
  if constexpr (std::is_same_v<E, GfMat>)
    return a.mul(b);
  else
    return compose(a, b);
}

}  // namespace

struct SemigroupFactory {
  static Semigroup make(int n, std::vector<int> table,
                        std::optional<Provenance> prov) {
    return Semigroup(n, std::move(table), std::move(prov));
  }
};

namespace {

template <class E>
Semigroup close_typed(std::vector<E> gens, int cap) {
  if (gens.empty()) throw_format("empty generator list");
  validate_generators(gens);

  std::vector<E> forms;
  std::vector<std::vector<int>> words;
  std::vector<ElementId> gen_ids;
  std::unordered_map<std::vector<int>, int, VecHash> index;

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    auto key = key_of(gens[gi]);
    auto it = index.find(key);
    if (it == index.end()) {
      if (static_cast<int>(forms.size()) >= cap)
        throw_size_cap("closure exceeds the element cap of " + std::to_string(cap));
      int id = static_cast<int>(forms.size());
      index.emplace(std::move(key), id);
      forms.push_back(gens[gi]);
      words.push_back({static_cast<int>(gi)});
      gen_ids.push_back(id);
    } else {
      gen_ids.push_back(it->second);
    }
  }

  for (std::size_t u = 0; u < forms.size(); ++u) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      E w = mul_forms(forms[u], gens[gi]);
      auto key = key_of(w);
      if (index.count(key)) continue;
      if (static_cast<int>(forms.size()) >= cap)
        throw_size_cap("closure exceeds the element cap of " + std::to_string(cap));
      int id = static_cast<int>(forms.size());
      index.emplace(std::move(key), id);
      forms.push_back(std::move(w));
      std::vector<int> word = words[u];
      word.push_back(static_cast<int>(gi));
      words.push_back(std::move(word));
    }
  }

  int n = static_cast<int>(forms.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic) if (n >= 64)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      E w = mul_forms(forms[a], forms[b]);
      table[static_cast<std::size_t>(a) * n + b] = index.at(key_of(w));
    }

  Provenance prov{std::move(forms), std::move(words), std::move(gen_ids)};
  return SemigroupFactory::make(n, std::move(table), std::move(prov));
}

}  // namespace

Semigroup close_generators(const GeneratorSet& generators, int cap) {
  if (cap < 1) throw_domain("closure cap must be positive");
  return std::visit([cap](const auto& g) { return close_typed(g, cap); },
                    generators);
}

}  // namespace sgconj
