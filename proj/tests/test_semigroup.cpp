#include <doctest.h>

#include "helpers.hpp"
#include "sgconj/families.hpp"
#include "sgconj/semigroup.hpp"

using namespace sgconj;

namespace {

// One-line 1-indexed shorthand for building transformations in tests.
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

}  // namespace

TEST_CASE("closure of the S_3 generators has six elements") {
  Semigroup S = close_generators(std::vector<Transformation>{tf({2, 3, 1}), tf({2, 1, 3})});
  CHECK(S.size() == 6);
}

TEST_CASE("a constant map closes to a single idempotent") {
  Semigroup S = close_generators(std::vector<Transformation>{tf({1, 1})});
  CHECK(S.size() == 1);
  CHECK(S.is_idempotent(0));
}

TEST_CASE("the T_3 generators close to 27 elements") {
  Semigroup S = close_generators(
      std::vector<Transformation>{tf({2, 3, 1}), tf({2, 1, 3}), tf({1, 1, 3})});
  CHECK(S.size() == 27);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(close_generators(std::vector<Transformation>{tf({2, 3, 1}),
                                                               tf({2, 1, 3}),
                                                               tf({1, 1, 3})},
                                   10),
                  SgError);
  CHECK_THROWS_AS(
      close_generators(std::vector<Transformation>{tf({1, 2}), tf({1, 2, 3})}),
      SgError);
  CHECK_THROWS_AS(close_generators(std::vector<Transformation>{}), SgError);
}

TEST_CASE("closure numbering is deterministic") {
  auto build = [] {
    return close_generators(
        std::vector<Transformation>{tf({2, 3, 1}), tf({2, 1, 3}), tf({1, 1, 3})});
  };
  Semigroup a = build();
  Semigroup b = build();
  CHECK(a.raw_table() == b.raw_table());
  CHECK(std::get<std::vector<Transformation>>(a.provenance()->elements) ==
        std::get<std::vector<Transformation>>(b.provenance()->elements));
}

TEST_CASE("element powers") {
  Semigroup t2 = full_transformation_monoid(2);
  ElementId swap = id_of(t2, tf({2, 1}));
  ElementId id = id_of(t2, tf({1, 2}));
  CHECK(t2.power(swap, 2) == id);
  CHECK(t2.power(swap, 1) == swap);

  Semigroup t3 = full_transformation_monoid(3);
  ElementId f = id_of(t3, tf({2, 3, 3}));
  CHECK(t3.power(f, 2) == id_of(t3, tf({3, 3, 3})));

  CHECK_THROWS_AS(t2.power(swap, 0), SgError);
}

TEST_CASE("index and period") {
  Semigroup t2 = full_transformation_monoid(2);
  IndexPeriod c = t2.index_period(id_of(t2, tf({1, 1})));
  CHECK(c.index == 1);
  CHECK(c.period == 1);

  Semigroup t3 = full_transformation_monoid(3);
  IndexPeriod cyc = t3.index_period(id_of(t3, tf({2, 3, 1})));
  CHECK(cyc.index == 1);
  CHECK(cyc.period == 3);

  Semigroup t4 = full_transformation_monoid(4);
  IndexPeriod g = t4.index_period(id_of(t4, tf({2, 3, 3, 4})));
  CHECK(g.index == 2);
  CHECK(g.period == 1);
}

TEST_CASE("omega powers") {
  Semigroup t3 = full_transformation_monoid(3);
  CHECK(t3.omega_plus(id_of(t3, tf({2, 3, 1})), 0) == id_of(t3, tf({1, 2, 3})));

  Semigroup t4 = full_transformation_monoid(4);
  CHECK(t4.omega_plus(id_of(t4, tf({2, 3, 3, 4})), 0) ==
        id_of(t4, tf({3, 3, 3, 4})));

  ElementId e = id_of(t3, tf({1, 1, 3}));
  REQUIRE(t3.is_idempotent(e));
  CHECK(t3.omega_plus(e, 5) == e);
}

TEST_CASE("group element order") {
  Semigroup t3 = full_transformation_monoid(3);
  CHECK(t3.group_element_order(id_of(t3, tf({2, 3, 1}))) == 3);
  CHECK(t3.group_element_order(id_of(t3, tf({1, 1, 3}))) == 1);

  Semigroup z5 = group_table("z5");
  CHECK(z5.group_element_order(1) == 5);

  // [2,3,3] has index 2, so it is not a group element.
  CHECK_THROWS_AS(t3.group_element_order(id_of(t3, tf({2, 3, 3}))), SgError);
}

TEST_CASE("regular modulus") {
  Semigroup s3 = group_table("s3");
  CHECK(s3.regular_modulus(0).n == 6);
  CHECK(s3.regular_modulus(3).n == 2);
  CHECK(s3.regular_modulus(2).n == 3);

  Semigroup z2 = group_table("z2");
  RegularModulus m = z2.regular_modulus(2);
  CHECK(m.n == 1);
  CHECK(m.elements == std::vector<ElementId>{0});

  CHECK_THROWS_AS(z2.regular_modulus(4), SgError);
  CHECK_THROWS_AS(z2.regular_modulus(6), SgError);
}

TEST_CASE("omega identities hold across a corpus") {
  std::vector<Semigroup> corpus;
  corpus.push_back(full_transformation_monoid(3));
  corpus.push_back(symmetric_inverse_monoid(2));
  corpus.push_back(group_table("z6"));
  corpus.push_back(testing::random_transformation_closure(4, 3, 12345));

  for (const Semigroup& S : corpus) {
    for (ElementId s = 0; s < S.size(); ++s) {
      ElementId w = S.omega_plus(s, 0);
      CHECK(S.is_idempotent(w));
      ElementId w1 = S.omega_plus(s, 1);
      CHECK(S.product(w, s) == w1);
      CHECK(S.product(s, w) == w1);
      IndexPeriod ip = S.index_period(s);
      CHECK(ip.index + ip.period <= S.size() + 1);
      for (unsigned long long j = 1; j <= 4; ++j)
        CHECK(S.power(w1, j) == S.omega_plus(s, j));
    }
  }
}

TEST_CASE("omega equals the |S|! power for small semigroups") {
  std::vector<Semigroup> corpus;
  corpus.push_back(full_transformation_monoid(2));  // 4 elements
  corpus.push_back(group_table("z5"));
  corpus.push_back(group_table("s3"));
  corpus.push_back(group_table("z7"));
  for (const Semigroup& S : corpus) {
    REQUIRE(S.size() <= 7);
    unsigned long long fact = 1;
    for (int i = 2; i <= S.size(); ++i) fact *= static_cast<unsigned>(i);
    for (ElementId s = 0; s < S.size(); ++s)
      CHECK(S.power(s, fact) == S.omega_plus(s, 0));
  }
}

TEST_CASE("explicit tables are validated") {
  CHECK_NOTHROW(Semigroup::from_table({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(Semigroup::from_table({{0, 1}, {1, 2}}), SgError);
  CHECK_THROWS_AS(Semigroup::from_table({{0, 1}}), SgError);
  // (0*0)*1 = 0 but 0*(0*1) = 1 under this table.
  CHECK_THROWS_AS(Semigroup::from_table({{1, 0}, {0, 0}}), SgError);

  Semigroup ok = Semigroup::from_table({{0, 0}, {0, 0}});
  CHECK_FALSE(ok.verify_associativity(true).has_value());
  CHECK_FALSE(ok.verify_associativity(false).has_value());
}

TEST_CASE("associativity kernels agree") {
  Semigroup t3 = full_transformation_monoid(3);
  CHECK(detail::assoc_violation_serial(t3.raw_table(), t3.size()) ==
        detail::assoc_violation_parallel(t3.raw_table(), t3.size()));

  // Corrupt one entry; both kernels must find the same least violation.
  std::vector<int> table = t3.raw_table();
  table[5 * t3.size() + 7] = (table[5 * t3.size() + 7] + 1) % t3.size();
  auto s = detail::assoc_violation_serial(table, t3.size());
  auto p = detail::assoc_violation_parallel(table, t3.size());
  REQUIRE(s.has_value());
  CHECK(s == p);
}

TEST_CASE("matrix generators close to the full monoid") {
  Semigroup m22 = full_matrix_monoid(2, 2);
  CHECK(m22.size() == 16);
  Semigroup m23 = full_matrix_monoid(2, 3);
  CHECK(m23.size() == 81);
  Semigroup m13 = full_matrix_monoid(1, 3);
  CHECK(m13.size() == 3);
}

TEST_CASE("partial injection closure sizes") {
  CHECK(symmetric_inverse_monoid(1).size() == 2);
  CHECK(symmetric_inverse_monoid(2).size() == 7);
  CHECK(symmetric_inverse_monoid(3).size() == 34);
}
