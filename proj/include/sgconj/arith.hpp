#ifndef SGCONJ_ARITH_HPP
#define SGCONJ_ARITH_HPP

// Scalar field descriptors and the number theory feeding the deciders:
// CRT exponents for p-regular decomposition, and the Galois subgroup
// H <= Z_n^x attached to a field. The root of unity itself is never
// materialized; everything reduces to integer arithmetic mod n.

#include <string>
#include <vector>

#include "sgconj/semigroup.hpp"

namespace sgconj {

struct FieldSpec {
  enum class Kind { Complex, Reals, Rationals, Finite, Custom };

  Kind kind = Kind::Complex;
  long q = 0;                      // Finite: prime power
  long custom_p = 0;               // Custom: characteristic, 0 or prime
  std::vector<long> custom_gens;   // Custom: generators of H (reduced mod n at use)

  static FieldSpec complex_numbers() { return FieldSpec{Kind::Complex, 0, 0, {}}; }
  static FieldSpec reals() { return FieldSpec{Kind::Reals, 0, 0, {}}; }
  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0, 0, {}}; }
  static FieldSpec finite(long q);
  static FieldSpec custom(long p, std::vector<long> gens);

  long characteristic() const;

  // Grammar: C | R | Q | F<q> | custom:<p>:<g1,g2,...>
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && q == o.q && custom_p == o.custom_p &&
           custom_gens == o.custom_gens;
  }
};

struct CrtExponents {
  long m;  // smallest positive: m = 1 mod p^k, m = 0 mod r
  long n;  // smallest positive: n = 0 mod p^k, n = 1 mod r
};

// N >= 1 written as p^k * r with gcd(p, r) = 1; p must be prime.
CrtExponents crt_exponents(long N, long p);

struct GaloisSubgroup {
  long modulus = 1;
  std::vector<long> members;     // sorted, representatives in [1, n]
  std::vector<long> generators;  // the defining generators, reduced

  bool contains(long j) const;
  bool is_full_unit_group() const;
};

// H <= Z_n^x for the field: C -> {1}; R -> <-1>; Q -> all units;
// F_q -> <q mod n> (Frobenius); Custom -> <gens>.
GaloisSubgroup galois_subgroup(const FieldSpec& field, long n);

struct PRegularParts {
  ElementId p_part;        // s(p)
  ElementId p_prime_part;  // s(p')
};

// p = 0: (s^omega, s^{omega+1}). p > 0: CRT powers of s^{omega+1}.
PRegularParts p_regular_parts(const Semigroup& S, ElementId s, long p);

}  // namespace sgconj

#endif
