#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sgconj/exactla.hpp"
#include "sgconj/families.hpp"
#include "sgconj/green.hpp"

using namespace sgconj;

namespace {

Transformation tf(std::initializer_list<int> one_indexed) {
  std::vector<int> img;
  for (int v : one_indexed) img.push_back(v - 1);
  return Transformation::checked(img);
}

ElementId id_of(const Semigroup& S, const Transformation& t) {
  const auto& forms = std::get<std::vector<Transformation>>(S.provenance()->elements);
  auto it = std::find(forms.begin(), forms.end(), t);
  REQUIRE(it != forms.end());
  return static_cast<ElementId>(it - forms.begin());
}

std::set<ElementId> as_set(const std::vector<ElementId>& v) {
  return std::set<ElementId>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("principal ideals in T_2") {
  Semigroup t2 = full_transformation_monoid(2);
  ElementId c1 = id_of(t2, tf({1, 1}));
  ElementId c2 = id_of(t2, tf({2, 2}));
  ElementId id = id_of(t2, tf({1, 2}));

  PrincipalIdeals pc = principal_ideals(t2, c1);
  CHECK(as_set(pc.two_sided) == std::set<ElementId>{c1, c2});

  PrincipalIdeals pi = principal_ideals(t2, id);
  CHECK(pi.two_sided.size() == 4);
}

TEST_CASE("a group has one ideal") {
  Semigroup s3 = group_table("s3");
  for (ElementId g = 0; g < s3.size(); ++g) {
    PrincipalIdeals p = principal_ideals(s3, g);
    CHECK(p.two_sided.size() == static_cast<std::size_t>(s3.size()));
    CHECK(p.right.size() == static_cast<std::size_t>(s3.size()));
    CHECK(p.left.size() == static_cast<std::size_t>(s3.size()));
  }
}

TEST_CASE("green classes of T_2") {
  Semigroup t2 = full_transformation_monoid(2);
  GreenClasses g = green_classes(t2);
  CHECK(g.n_j() == 2);
  ElementId id = id_of(t2, tf({1, 2}));
  ElementId swap = id_of(t2, tf({2, 1}));
  ElementId c1 = id_of(t2, tf({1, 1}));
  ElementId c2 = id_of(t2, tf({2, 2}));
  CHECK(g.same_j(id, swap));
  CHECK(g.same_j(c1, c2));
  CHECK_FALSE(g.same_j(id, c1));
  // The constant class sits below the permutation class.
  CHECK(g.j_leq(g.j_of(c1), g.j_of(id)));
  CHECK_FALSE(g.j_leq(g.j_of(id), g.j_of(c1)));
}

TEST_CASE("green classes of a group are trivial") {
  Semigroup q8 = group_table("q8");
  GreenClasses g = green_classes(q8);
  CHECK(g.n_j() == 1);
  CHECK(g.n_r() == 1);
  CHECK(g.n_l() == 1);
  CHECK(g.n_h() == 1);
}

TEST_CASE("green classes of I_2") {
  Semigroup i2 = symmetric_inverse_monoid(2);
  REQUIRE(i2.size() == 7);
  GreenClasses g = green_classes(i2);
  CHECK(g.n_j() == 3);
  auto members = g.j_class_members();
  std::multiset<std::size_t> sizes;
  for (const auto& c : members) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 4});
  // Three totally ordered ideals: empty < rank 1 < rank 2.
  const auto& forms =
      std::get<std::vector<PartialInjection>>(i2.provenance()->elements);
  for (int a = 0; a < g.n_j(); ++a)
    for (int b = 0; b < g.n_j(); ++b) {
      int ra = map_rank(forms[members[a].front()]);
      int rb = map_rank(forms[members[b].front()]);
      CHECK(g.j_leq(a, b) == (ra <= rb));
    }
}

TEST_CASE("j_equivalent matches ranks in T_4") {
  Semigroup t4 = full_transformation_monoid(4);
  ElementId f = id_of(t4, tf({2, 2, 4, 4}));
  ElementId g = id_of(t4, tf({2, 3, 3, 4}));
  CHECK_FALSE(j_equivalent(t4, f, g));
  CHECK(j_equivalent(t4, f, f));

  const auto& forms = std::get<std::vector<Transformation>>(t4.provenance()->elements);
  GreenClasses green = green_classes(t4);
  for (ElementId a = 0; a < t4.size(); a += 7)
    for (ElementId b = 0; b < t4.size(); b += 11)
      CHECK(green.same_j(a, b) == (map_rank(forms[a]) == map_rank(forms[b])));
}

TEST_CASE("j_equivalent matches matrix rank in M_2(F_2)") {
  Semigroup m22 = full_matrix_monoid(2, 2);
  const auto& mats = std::get<std::vector<GfMat>>(m22.provenance()->elements);
  GreenClasses green = green_classes(m22);
  for (ElementId a = 0; a < m22.size(); ++a)
    for (ElementId b = 0; b < m22.size(); ++b) {
      int ra = exact_rank(ExactMatrix{mats[a]});
      int rb = exact_rank(ExactMatrix{mats[b]});
      CHECK(green.same_j(a, b) == (ra == rb));
    }
}

TEST_CASE("one-sided ideal identities inside the J-class") {
  // sS^1 ∩ J_s = R_s and S^1 s ∩ J_s = L_s, elementwise.
  std::vector<Semigroup> corpus;
  corpus.push_back(full_transformation_monoid(3));
  corpus.push_back(symmetric_inverse_monoid(2));
  corpus.push_back(testing::random_transformation_closure(4, 3, 777));
  for (const Semigroup& S : corpus) {
    GreenClasses g = green_classes(S);
    for (ElementId s = 0; s < S.size(); ++s) {
      PrincipalIdeals p = principal_ideals(S, s);
      std::set<ElementId> right_in_j, left_in_j, r_class, l_class;
      for (ElementId x : p.right)
        if (g.same_j(x, s)) right_in_j.insert(x);
      for (ElementId x : p.left)
        if (g.same_j(x, s)) left_in_j.insert(x);
      for (ElementId x = 0; x < S.size(); ++x) {
        if (g.r_of(x) == g.r_of(s)) r_class.insert(x);
        if (g.l_of(x) == g.l_of(s)) l_class.insert(x);
      }
      CHECK(right_in_j == r_class);
      CHECK(left_in_j == l_class);
    }
  }
}

TEST_CASE("R and L labels match one-sided ideal equality") {
  Semigroup S = testing::random_transformation_closure(4, 4, 424242);
  GreenClasses g = green_classes(S);
  for (ElementId a = 0; a < S.size(); a += 3)
    for (ElementId b = a; b < S.size(); b += 5) {
      PrincipalIdeals pa = principal_ideals(S, a);
      PrincipalIdeals pb = principal_ideals(S, b);
      CHECK((g.r_of(a) == g.r_of(b)) == (pa.right == pb.right));
      CHECK((g.l_of(a) == g.l_of(b)) == (pa.left == pb.left));
      CHECK(g.same_j(a, b) == (pa.two_sided == pb.two_sided));
    }
}

TEST_CASE("H refines R and L, which refine J") {
  Semigroup S = full_transformation_monoid(3);
  GreenClasses g = green_classes(S);
  for (ElementId a = 0; a < S.size(); ++a)
    for (ElementId b = 0; b < S.size(); ++b) {
      if (g.h_of(a) == g.h_of(b)) {
        CHECK(g.r_of(a) == g.r_of(b));
        CHECK(g.l_of(a) == g.l_of(b));
      }
      if (g.r_of(a) == g.r_of(b)) CHECK(g.same_j(a, b));
      if (g.l_of(a) == g.l_of(b)) CHECK(g.same_j(a, b));
    }
}

TEST_CASE("maximal subgroups in T_n") {
  Semigroup t3 = full_transformation_monoid(3);
  GreenClasses g = green_classes(t3);

  MaximalSubgroup units = maximal_subgroup(t3, g, id_of(t3, tf({1, 2, 3})));
  CHECK(units.elements.size() == 6);

  // Exhaustive oracle at e = [1,2,2]: compute eSe ∩ J_e directly.
  ElementId e = id_of(t3, tf({1, 2, 2}));
  std::set<ElementId> expected;
  for (ElementId x = 0; x < t3.size(); ++x) {
    ElementId exe = t3.product(t3.product(e, x), e);
    if (j_equivalent(t3, exe, e)) expected.insert(exe);
  }
  MaximalSubgroup ge = maximal_subgroup(t3, g, e);
  CHECK(as_set(ge.elements) == expected);
  CHECK(ge.elements.size() == 2);
  CHECK(as_set(ge.elements) == std::set<ElementId>{e, id_of(t3, tf({2, 1, 1}))});

  Semigroup t2 = full_transformation_monoid(2);
  ElementId c1 = id_of(t2, tf({1, 1}));
  MaximalSubgroup gc = maximal_subgroup(t2, c1);
  CHECK(gc.elements == std::vector<ElementId>{c1});

  CHECK_THROWS_AS(maximal_subgroup(t3, id_of(t3, tf({2, 3, 1}))), SgError);
}

TEST_CASE("Lagrange holds in every maximal subgroup of T_3 and I_2") {
  std::vector<Semigroup> corpus;
  corpus.push_back(full_transformation_monoid(3));
  corpus.push_back(symmetric_inverse_monoid(2));
  for (const Semigroup& S : corpus) {
    GreenClasses g = green_classes(S);
    for (ElementId e = 0; e < S.size(); ++e) {
      if (!S.is_idempotent(e)) continue;
      MaximalSubgroup ge = maximal_subgroup(S, g, e);
      for (ElementId x : ge.elements) {
        long order = S.group_element_order(x);
        CHECK(ge.elements.size() % order == 0);
      }
    }
  }
}

TEST_CASE("parallel and serial green kernels agree") {
  std::vector<Semigroup> corpus;
  corpus.push_back(full_transformation_monoid(4));
  corpus.push_back(symmetric_inverse_monoid(3));
  corpus.push_back(testing::random_transformation_closure(5, 4, 99));
  for (const Semigroup& S : corpus) {
    GreenClasses a = green_classes(S);
    GreenClasses b = green_classes_serial(S);
    for (ElementId s = 0; s < S.size(); ++s) {
      CHECK(a.r_of(s) == b.r_of(s));
      CHECK(a.l_of(s) == b.l_of(s));
      CHECK(a.j_of(s) == b.j_of(s));
      CHECK(a.h_of(s) == b.h_of(s));
    }
    REQUIRE(a.n_j() == b.n_j());
    for (int x = 0; x < a.n_j(); ++x)
      for (int y = 0; y < a.n_j(); ++y) CHECK(a.j_leq(x, y) == b.j_leq(x, y));
  }
}
