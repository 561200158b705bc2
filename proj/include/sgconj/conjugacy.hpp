#ifndef SGCONJ_CONJUGACY_HPP
#define SGCONJ_CONJUGACY_HPP

// Deciders for generalized conjugacy, character equivalence over a field,
// the power-J condition, and full linear conjugacy, with certificates.
//
// Witness searches scan x ascending, then x' ascending, then the exponent j
// ascending, and return the first hit, so certificates are deterministic.
// The default pruning only removes candidates that provably cannot occur in
// a witness, hence it returns the identical first hit.

#include <optional>
#include <string>

#include "sgconj/arith.hpp"
#include "sgconj/green.hpp"
#include "sgconj/partition.hpp"
#include "sgconj/semigroup.hpp"

namespace sgconj {

struct Witness {
  ElementId x;
  ElementId x_prime;
  std::optional<long> j;  // member of H, as an exponent in [1, n]
};

enum class FailedCondition { PowerJ, QCharEquiv, KCharEquiv };

const char* failed_condition_name(FailedCondition c);

struct VerdictEvidence {
  std::optional<long> failing_k;   // PowerJ: least k with s^k not J t^k
  std::optional<int> j_class_s;    // J-class labels of s^k and t^k at that k
  std::optional<int> j_class_t;
  std::optional<long> modulus;     // character conditions: the modulus n
  std::string note;
};

struct ConjugacyVerdict {
  bool result = false;
  std::optional<Witness> witness;
  std::optional<FailedCondition> failed_condition;
  VerdictEvidence evidence;
};

struct SearchOptions {
  bool prune = true;        // candidate filters derived from the witness laws
  bool paper_bound = false; // power-J: check k = 1..|S| instead of the
                            // index/period bound
};

std::optional<Witness> generalized_conjugates(const Semigroup& S, ElementId s,
                                              ElementId t,
                                              const SearchOptions& opts = {});

std::optional<Witness> char_equivalent(const Semigroup& S, ElementId s,
                                       ElementId t, const FieldSpec& field,
                                       const SearchOptions& opts = {});

std::optional<Witness> q_character_equivalent(const Semigroup& S, ElementId s,
                                              ElementId t,
                                              const SearchOptions& opts = {});

struct PowerJResult {
  bool ok;
  std::optional<long> failing_k;
};

PowerJResult power_j_condition(const Semigroup& S, ElementId s, ElementId t,
                               const SearchOptions& opts = {});
PowerJResult power_j_condition(const Semigroup& S, const GreenClasses& green,
                               ElementId s, ElementId t,
                               const SearchOptions& opts = {});

// Precomputed per-(semigroup, field) state shared across pair decisions.
class DeciderContext {
 public:
  DeciderContext(const Semigroup& S, const FieldSpec& field,
                 const SearchOptions& opts = {});

  const Semigroup& semigroup() const { return *S_; }
  const GreenClasses& green() const { return green_; }
  const FieldSpec& field() const { return field_; }
  const SearchOptions& options() const { return opts_; }

  ConjugacyVerdict decide(ElementId s, ElementId t) const;

  // The individual conditions against the precomputed setups: character
  // equivalence over the context field, and generalized conjugacy.
  std::optional<Witness> char_equiv(ElementId s, ElementId t) const;
  std::optional<Witness> generalized(ElementId s, ElementId t) const;

 private:
  struct CharSetup {
    long p = 0;
    GaloisSubgroup h;
    std::vector<ElementId> p_prime;  // s(p') per element
  };

  const Semigroup* S_;
  FieldSpec field_;
  SearchOptions opts_;
  GreenClasses green_;
  CharSetup k_setup_;
  std::optional<CharSetup> q_setup_;  // absent when condition (2) may be skipped
};

ConjugacyVerdict linear_conjugate(const Semigroup& S, ElementId s, ElementId t,
                                  const FieldSpec& field,
                                  const SearchOptions& opts = {});

// Union-find over pairwise decisions; the parallel kernel evaluates pair
// batches concurrently and merges serially, the serial variant is the
// reference. Both produce the identical canonical partition.
Partition conjugacy_partition(const Semigroup& S, const FieldSpec& field,
                              const SearchOptions& opts = {});
Partition conjugacy_partition_serial(const Semigroup& S, const FieldSpec& field,
                                     const SearchOptions& opts = {});

}  // namespace sgconj

#endif
