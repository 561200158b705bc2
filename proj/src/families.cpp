#include "sgconj/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sgconj {

namespace {

Transformation n_cycle(int n) {
  Transformation t;
  t.img.resize(n);
  for (int i = 0; i < n; ++i) t.img[i] = (i + 1) % n;
  return t;
}

Transformation first_transposition(int n) {
  Transformation t = Transformation::identity(n);
  t.img[0] = 1;
  t.img[1] = 0;
  return t;
}

}  // namespace

Semigroup full_transformation_monoid(int n, int cap) {
  if (n < 1) throw_domain("T_n requires n >= 1");
  std::vector<Transformation> gens;
  if (n == 1) {
    gens.push_back(Transformation::identity(1));
  } else {
    gens.push_back(n_cycle(n));
    gens.push_back(first_transposition(n));
    Transformation collapse = Transformation::identity(n);
    collapse.img[1] = 0;  // sends 2 to 1 in one-line notation
    gens.push_back(collapse);
  }
  return close_generators(gens, cap);
}

Semigroup symmetric_inverse_monoid(int n, int cap) {
  if (n < 1) throw_domain("I_n requires n >= 1");
  std::vector<PartialInjection> gens;
  gens.push_back(PartialInjection::identity(n));
  if (n >= 2) {
    PartialInjection cyc;
    cyc.img.resize(n);
    for (int i = 0; i < n; ++i) cyc.img[i] = (i + 1) % n;
    gens.push_back(cyc);
    PartialInjection swap = PartialInjection::identity(n);
    swap.img[0] = 1;
    swap.img[1] = 0;
    gens.push_back(swap);
  }
  PartialInjection drop = PartialInjection::identity(n);
  drop.img[n - 1] = PartialInjection::kUndefined;
  gens.push_back(drop);
  return close_generators(gens, cap);
}

Semigroup full_matrix_monoid(int n, long q, int cap) {
  if (n < 1) throw_domain("M_n(F_q) requires n >= 1");
  const GfField& f = GfField::get(q);
  std::vector<GfMat> gens;

  if (n == 1) {
    // F_q as a multiplicative monoid: a primitive element and zero.
    GfElem prim = 0;
    for (long a = 2; a < q; ++a)
      if (f.multiplicative_order(static_cast<GfElem>(a)) == q - 1) {
        prim = static_cast<GfElem>(a);
        break;
      }
    GfMat unit(f, 1, 1);
    unit.at(0, 0) = q == 2 ? f.one() : prim;
    gens.push_back(unit);
    GfMat zero(f, 1, 1);
    gens.push_back(zero);
    return close_generators(gens, cap);
  }

  GfMat cyc(f, n, n);
  for (int i = 0; i < n; ++i) cyc.at((i + 1) % n, i) = f.one();
  gens.push_back(cyc);

  GfMat swap = GfMat::identity(f, n);
  swap.at(0, 0) = f.zero();
  swap.at(1, 1) = f.zero();
  swap.at(0, 1) = f.one();
  swap.at(1, 0) = f.one();
  gens.push_back(swap);

  GfMat transvection = GfMat::identity(f, n);
  transvection.at(0, 1) = f.one();
  gens.push_back(transvection);

  if (q > 2) {
    GfElem prim = 0;
    for (long a = 2; a < q; ++a)
      if (f.multiplicative_order(static_cast<GfElem>(a)) == q - 1) {
        prim = static_cast<GfElem>(a);
        break;
      }
    GfMat diag = GfMat::identity(f, n);
    diag.at(0, 0) = prim;
    gens.push_back(diag);
  }

  GfMat rank_drop = GfMat::identity(f, n);
  rank_drop.at(n - 1, n - 1) = f.zero();
  gens.push_back(rank_drop);

  return close_generators(gens, cap);
}

namespace {

Semigroup cyclic_group_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Semigroup::from_table(t);
}

Semigroup klein_four_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return Semigroup::from_table(t);
}

Semigroup s3_table() {
  // The six permutations of three points in lexicographic one-line order.
  std::vector<Transformation> perms;
  std::vector<int> base{0, 1, 2};
  do {
    perms.push_back(Transformation{base});
  } while (std::next_permutation(base.begin(), base.end()));
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Transformation c = compose(perms[a], perms[b]);
      t[a][b] = static_cast<int>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return Semigroup::from_table(t);
}

Semigroup quaternion_table() {
  // Elements 2b+s: b in {1, i, j, k}, s the sign bit (0 = +, 1 = -).
  auto mul_basis = [](int a, int b) -> std::pair<int, int> {
    if (a == 0) return {0, b};
    if (b == 0) return {0, a};
    if (a == b) return {1, 0};  // i*i = j*j = k*k = -1
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1},
                                    {0, 2, 1, 0}};
    // i*j = k, j*k = i, k*i = j; reversed order flips the sign.
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    return {forward ? 0 : 1, third[a][b]};
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = x / 2, sx = x % 2;
      int by = y / 2, sy = y % 2;
      auto [sgn, b] = mul_basis(bx, by);
      int s = (sx + sy + sgn) % 2;
      t[x][y] = 2 * b + s;
    }
  return Semigroup::from_table(t);
}

}  // namespace

Semigroup group_table(const std::string& name) {
  if (name == "v4") return klein_four_table();
  if (name == "s3") return s3_table();
  if (name == "q8") return quaternion_table();
  if (name.size() >= 2 && name[0] == 'z') {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw_format("unknown group table: " + name);
      n = n * 10 + (name[i] - '0');
    }
    if (n < 1 || n > 12)
      throw_domain("cyclic group tables are built in for z1..z12");
    return cyclic_group_table(n);
  }
  throw_format("unknown group table: " + name +
               " (available: z1..z12, v4, s3, q8)");
}

namespace {

template <class MapT, class FieldT, class Put>
ExactMatrix rep_matrix(const MapT& f, const FieldT& field, Put put) {
  int n = f.degree();
  Mat<FieldT> m(field, n, n);
  for (int j = 0; j < n; ++j) {
    if constexpr (std::is_same_v<MapT, PartialInjection>) {
      if (!f.defined(j)) continue;
    }
    put(m, f.img[j], j);
  }
  return ExactMatrix{std::move(m)};
}

}  // namespace

ExactMatrix standard_representation(const Transformation& f) {
  return rep_matrix(f, QField::instance(), [](Mat<QField>& m, int i, int j) {
    m.at(i, j) = Rational(1);
  });
}

ExactMatrix standard_representation(const PartialInjection& f) {
  return rep_matrix(f, QField::instance(), [](Mat<QField>& m, int i, int j) {
    m.at(i, j) = Rational(1);
  });
}

ExactMatrix standard_representation_gf(const Transformation& f, long q) {
  const GfField& field = GfField::get(q);
  return rep_matrix(f, field, [&](Mat<GfField>& m, int i, int j) {
    m.at(i, j) = field.one();
  });
}

ExactMatrix standard_representation_gf(const PartialInjection& f, long q) {
  const GfField& field = GfField::get(q);
  return rep_matrix(f, field, [&](Mat<GfField>& m, int i, int j) {
    m.at(i, j) = field.one();
  });
}

namespace {

template <class MapT>
std::vector<int> rank_sequence_of_map(const MapT& f) {
  std::vector<int> ranks;
  MapT power = f;
  for (int i = 1; i <= f.degree(); ++i) {
    ranks.push_back(map_rank(power));
    power = compose(power, f);
  }
  return ranks;
}

// The set of points on which f eventually acts as a permutation.
template <class MapT>
std::vector<int> eventual_image(const MapT& f) {
  int n = f.degree();
  std::vector<bool> in(n, false);
  std::size_t size = 0;
  for (int i = 0; i < n; ++i) {
    int v;
    if constexpr (std::is_same_v<MapT, PartialInjection>) {
      if (!f.defined(i)) continue;
      v = f.img[i];
    } else {
      v = f.img[i];
    }
    if (!in[v]) {
      in[v] = true;
      ++size;
    }
  }
  while (true) {
    std::vector<bool> next(n, false);
    std::size_t next_size = 0;
    for (int i = 0; i < n; ++i) {
      if (!in[i]) continue;
      int v;
      if constexpr (std::is_same_v<MapT, PartialInjection>) {
        if (!f.defined(i)) continue;
        v = f.img[i];
      } else {
        v = f.img[i];
      }
      if (!next[v]) {
        next[v] = true;
        ++next_size;
      }
    }
    if (next_size == size && next == in) break;
    in = std::move(next);
    size = next_size;
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

template <class MapT>
CycleType cycle_type_on_eventual_image(const MapT& f) {
  std::vector<int> image = eventual_image(f);
  std::vector<int> pos(f.degree(), -1);
  for (std::size_t k = 0; k < image.size(); ++k) pos[image[k]] = static_cast<int>(k);
  CycleType type;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (seen[k]) continue;
    int len = 0;
    std::size_t cur = k;
    while (!seen[cur]) {
      seen[cur] = true;
      int v = f.img[image[cur]];
      cur = static_cast<std::size_t>(pos[v]);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace

std::vector<int> map_rank_sequence(const Transformation& f) {
  return rank_sequence_of_map(f);
}
std::vector<int> map_rank_sequence(const PartialInjection& f) {
  return rank_sequence_of_map(f);
}

CycleType eventual_image_cycle_type(const Transformation& f) {
  return cycle_type_on_eventual_image(f);
}
CycleType eventual_image_cycle_type(const PartialInjection& f) {
  return cycle_type_on_eventual_image(f);
}

namespace {

// AHU-style canonical code of the tree hanging below `root` (edges point
// toward the cycle), children being the non-cycle preimages.
std::string tree_code(int root, const std::vector<std::vector<int>>& children) {
  std::vector<std::string> codes;
  for (int c : children[root]) codes.push_back(tree_code(c, children));
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (const auto& c : codes) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string functional_digraph_code(const Transformation& f) {
  int n = f.degree();
  // Peel non-cycle vertices: repeatedly remove in-degree-zero points.
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i) ++indeg[f.img[i]];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  std::vector<bool> on_cycle(n, true);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    on_cycle[v] = false;
    int w = f.img[v];
    if (--indeg[w] == 0) stack.push_back(w);
  }

  std::vector<std::vector<int>> children(n);
  for (int i = 0; i < n; ++i)
    if (!on_cycle[i]) children[f.img[i]].push_back(i);

  std::vector<std::string> components;
  std::vector<bool> visited(n, false);
  for (int i = 0; i < n; ++i) {
    if (!on_cycle[i] || visited[i]) continue;
    std::vector<std::string> around;
    int cur = i;
    while (!visited[cur]) {
      visited[cur] = true;
      around.push_back(tree_code(cur, children));
      cur = f.img[cur];
    }
    // Minimal rotation makes the starting point immaterial.
    std::string best;
    for (std::size_t r = 0; r < around.size(); ++r) {
      std::string cand;
      for (std::size_t k = 0; k < around.size(); ++k)
        cand += around[(r + k) % around.size()];
      if (best.empty() || cand < best) best = cand;
    }
    components.push_back("[" + std::to_string(around.size()) + ":" + best + "]");
  }
  std::sort(components.begin(), components.end());
  std::string out;
  for (const auto& c : components) out += c;
  return out;
}

bool functional_digraph_isomorphic(const Transformation& f,
                                   const Transformation& g) {
  if (f.degree() != g.degree())
    throw_domain("digraph isomorphism requires equal degrees");
  return functional_digraph_code(f) == functional_digraph_code(g);
}

PathCycleShape path_cycle_shape(const PartialInjection& f) {
  int n = f.degree();
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i)
    if (f.defined(i)) inverse[f.img[i]] = i;

  PathCycleShape shape;
  std::vector<bool> seen(n, false);
  // Chains start at points with no preimage.
  for (int i = 0; i < n; ++i) {
    if (seen[i] || inverse[i] != -1) continue;
    int len = 0, cur = i;
    while (true) {
      seen[cur] = true;
      ++len;
      if (!f.defined(cur)) break;
      cur = f.img[cur];
    }
    shape.chains.push_back(len);
  }
  // Whatever remains lies on cycles.
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = f.img[cur];
      ++len;
    }
    shape.cycles.push_back(len);
  }
  std::sort(shape.cycles.rbegin(), shape.cycles.rend());
  std::sort(shape.chains.rbegin(), shape.chains.rend());
  return shape;
}

namespace {

ConjugacyVerdict verdict_of(bool ok, const std::string& note_when_false) {
  ConjugacyVerdict v;
  v.result = ok;
  if (!ok) v.evidence.note = note_when_false;
  return v;
}

void require_complex(const FieldSpec& field, const char* family) {
  if (field.kind != FieldSpec::Kind::Complex)
    throw_unsupported(std::string(family) +
                      " fast path is stated over C; use the general decider");
}

}  // namespace

ConjugacyVerdict fast_path_decide(const Transformation& f,
                                  const Transformation& g,
                                  const FieldSpec& field) {
  require_complex(field, "T_n");
  if (f.degree() != g.degree())
    throw_domain("fast path requires elements of one family");
  if (map_rank_sequence(f) != map_rank_sequence(g))
    return verdict_of(false, "rank sequences differ");
  if (eventual_image_cycle_type(f) != eventual_image_cycle_type(g))
    return verdict_of(false, "eventual-image cycle types differ");
  return verdict_of(true, "");
}

ConjugacyVerdict fast_path_decide(const PartialInjection& f,
                                  const PartialInjection& g,
                                  const FieldSpec& field) {
  require_complex(field, "I_n");
  if (f.degree() != g.degree())
    throw_domain("fast path requires elements of one family");
  return verdict_of(path_cycle_shape(f) == path_cycle_shape(g),
                    "path/cycle shapes differ");
}

ConjugacyVerdict fast_path_decide(const GfMat& f, const GfMat& g,
                                  const FieldSpec& field) {
  if (field.kind != FieldSpec::Kind::Finite || field.q != f.f->q())
    throw_unsupported("M_n(F_q) fast path requires the field F_q of the entries");
  if (f.rows != g.rows || f.f != g.f)
    throw_domain("fast path requires elements of one family");
  return verdict_of(similar(ExactMatrix{f}, ExactMatrix{g}),
                    "invariant factors differ");
}

namespace {

long expected_family_size(FamilyKind kind, int degree, long q) {
  switch (kind) {
    case FamilyKind::Tn: {
      long size = 1;
      for (int i = 0; i < degree; ++i) size *= degree;
      return size;
    }
    case FamilyKind::In: {
      // sum over k of C(n,k)^2 * k!
      long total = 0;
      for (int k = 0; k <= degree; ++k) {
        long binom = 1;
        for (int i = 0; i < k; ++i) binom = binom * (degree - i) / (i + 1);
        long fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        total += binom * binom * fact;
      }
      return total;
    }
    case FamilyKind::MatMonoid: {
      long size = 1;
      for (int i = 0; i < degree * degree; ++i) size *= q;
      return size;
    }
  }
  return -1;
}

}  // namespace

ConjugacyVerdict fast_path_decide(const Semigroup& family, ElementId s,
                                  ElementId t, const FieldSpec& field) {
  if (!family.provenance())
    throw_unsupported("fast path needs concrete element forms");
  const Provenance& prov = *family.provenance();
  if (s < 0 || s >= family.size() || t < 0 || t >= family.size())
    throw_domain("element id out of range");

  if (const auto* tr = std::get_if<std::vector<Transformation>>(&prov.elements)) {
    if (family.size() != expected_family_size(FamilyKind::Tn, (*tr)[0].degree(), 0))
      throw_unsupported("fast path requires the full transformation monoid");
    return fast_path_decide((*tr)[s], (*tr)[t], field);
  }
  if (const auto* pi = std::get_if<std::vector<PartialInjection>>(&prov.elements)) {
    if (family.size() != expected_family_size(FamilyKind::In, (*pi)[0].degree(), 0))
      throw_unsupported("fast path requires the full symmetric inverse monoid");
    return fast_path_decide((*pi)[s], (*pi)[t], field);
  }
  const auto& mats = std::get<std::vector<GfMat>>(prov.elements);
  if (family.size() !=
      expected_family_size(FamilyKind::MatMonoid, mats[0].rows, mats[0].f->q()))
    throw_unsupported("fast path requires the full matrix monoid");
  return fast_path_decide(mats[s], mats[t], field);
}

}  // namespace sgconj
