#ifndef SGCONJ_EXACTLA_HPP
#define SGCONJ_EXACTLA_HPP

// The independent oracle: exact dense linear algebra over Q and F_q.
// Rank sequences, Fitting decomposition, invariant factors (similarity),
// and permutation cycle types, used to validate the syntactic deciders
// against concrete representation matrices.

#include <string>
#include <variant>
#include <vector>

#include "sgconj/matrix.hpp"
#include "sgconj/partition.hpp"
#include "sgconj/poly.hpp"

namespace sgconj {

struct ExactMatrix {
  std::variant<Mat<QField>, Mat<GfField>> m;

  int rows() const;
  int cols() const;
  bool is_rational() const { return m.index() == 0; }
  long gf_q() const;  // 0 for rational matrices
  std::string field_name() const;

  ExactMatrix mul(const ExactMatrix& o) const;
  ExactMatrix pow(unsigned long long k) const;
  bool operator==(const ExactMatrix& o) const;
};

ExactMatrix rational_matrix(const std::vector<std::vector<Rational>>& entries);
ExactMatrix gf_matrix(long q, const std::vector<std::vector<int>>& entries);
ExactMatrix wrap_matrix(Mat<QField> m);
ExactMatrix wrap_matrix(Mat<GfField> m);

// Companion matrix of a monic polynomial given low-first including the
// leading 1.
ExactMatrix companion_q(const std::vector<Rational>& monic_coeffs);
ExactMatrix companion_gf(long q, const std::vector<int>& monic_coeffs);

struct RankSequence {
  std::vector<int> dims;  // rank M, rank M^2, ... truncated at stabilization
  int stable;             // the eventual-range dimension
};

RankSequence rank_sequence(const ExactMatrix& M);

struct FittingSplit {
  ExactMatrix eventual_range_basis;   // columns span im^inf M (canonical)
  ExactMatrix eventual_kernel_basis;  // columns span ker^inf M (canonical)
  int stabilization_index;            // least m with rank M^m = rank M^{m+1}
};

FittingSplit fitting_split(const ExactMatrix& M);

struct InvariantFactors {
  std::variant<std::vector<Poly<QField>>, std::vector<Poly<GfField>>> factors;

  std::size_t count() const;
  // Coefficient lists, low degree first; rationals as "a/b" strings,
  // F_q entries as element codes.
  std::vector<std::vector<std::string>> coeff_strings() const;
  bool operator==(const InvariantFactors& o) const;
};

// Nonconstant invariant factors of xI - M, monic, in divisibility order.
InvariantFactors invariant_factors(const ExactMatrix& M);

// Similarity over the matrix field, decided by equal invariant factors.
bool similar(const ExactMatrix& M, const ExactMatrix& N);

using CycleType = std::vector<int>;  // weakly decreasing

// Requires a 0/1 matrix with one 1 per row and column.
CycleType permutation_cycle_type(const ExactMatrix& M);

// The action of M on its eventual range, written in the canonical basis of
// column_space_basis(M^m).
ExactMatrix eventual_range_restriction(const ExactMatrix& M);

// Rank sequences equal + equal cycle types of the eventual-range
// restrictions; defined only when both restrictions are permutation
// matrices (Unsupported otherwise; callers fall back to similar()).
bool kovacs_conjugate(const ExactMatrix& M, const ExactMatrix& N);

int exact_rank(const ExactMatrix& M);

// Groups matrices by invariant factors. The parallel kernel computes the
// per-matrix factors concurrently; the serial variant is the reference.
Partition similarity_partition(const std::vector<ExactMatrix>& mats);
Partition similarity_partition_serial(const std::vector<ExactMatrix>& mats);

}  // namespace sgconj

#endif
