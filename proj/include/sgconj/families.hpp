#ifndef SGCONJ_FAMILIES_HPP
#define SGCONJ_FAMILIES_HPP

// Constructors and fast-path deciders for the example families: full
// transformation monoids T_n, symmetric inverse monoids I_n, full matrix
// monoids M_n(F_q), and built-in group tables.

#include <string>
#include <vector>

#include "sgconj/conjugacy.hpp"
#include "sgconj/exactla.hpp"
#include "sgconj/maps.hpp"
#include "sgconj/semigroup.hpp"

namespace sgconj {

enum class FamilyKind { Tn, In, MatMonoid };

Semigroup full_transformation_monoid(int n, int cap = kDefaultClosureCap);
Semigroup symmetric_inverse_monoid(int n, int cap = kDefaultClosureCap);
Semigroup full_matrix_monoid(int n, long q, int cap = kDefaultClosureCap);

// Built-in tables: z1..z12, v4 (Klein four-group), s3, q8.
Semigroup group_table(const std::string& name);

// rho(f)_{ij} = 1 iff f(j) = i; columns of undefined points are zero.
ExactMatrix standard_representation(const Transformation& f);
ExactMatrix standard_representation(const PartialInjection& f);
ExactMatrix standard_representation_gf(const Transformation& f, long q);
ExactMatrix standard_representation_gf(const PartialInjection& f, long q);

// |Im f^i| for i = 1..n.
std::vector<int> map_rank_sequence(const Transformation& f);
std::vector<int> map_rank_sequence(const PartialInjection& f);

// Cycle type of f acting on Im f^omega, weakly decreasing.
CycleType eventual_image_cycle_type(const Transformation& f);
CycleType eventual_image_cycle_type(const PartialInjection& f);

// Canonical code of the functional digraph (per-component rooted-tree codes
// around the cycle, minimal rotation, components sorted).
std::string functional_digraph_code(const Transformation& f);

// Conjugacy by a permutation of the points.
bool functional_digraph_isomorphic(const Transformation& f,
                                   const Transformation& g);

// Disjoint cycle lengths and maximal chain lengths (vertices per chain),
// each weakly decreasing: the S_n-conjugacy invariant of a partial injection.
struct PathCycleShape {
  std::vector<int> cycles;
  std::vector<int> chains;
  bool operator==(const PathCycleShape& o) const {
    return cycles == o.cycles && chains == o.chains;
  }
};

PathCycleShape path_cycle_shape(const PartialInjection& f);

// Family-specific decision rules; Tn and In are stated over C, MatMonoid
// over F_q matching the matrices. Other fields raise Unsupported.
ConjugacyVerdict fast_path_decide(const Transformation& f,
                                  const Transformation& g,
                                  const FieldSpec& field);
ConjugacyVerdict fast_path_decide(const PartialInjection& f,
                                  const PartialInjection& g,
                                  const FieldSpec& field);
ConjugacyVerdict fast_path_decide(const GfMat& f, const GfMat& g,
                                  const FieldSpec& field);

// Dispatch through the provenance of a full family; Unsupported when the
// semigroup is not a full T_n / I_n / M_n(F_q).
ConjugacyVerdict fast_path_decide(const Semigroup& family, ElementId s,
                                  ElementId t, const FieldSpec& field);

}  // namespace sgconj

#endif
