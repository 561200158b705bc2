#ifndef SGCONJ_IO_HPP
#define SGCONJ_IO_HPP

// JSON formats. Semigroup input is one of (0-indexed):
//   {"table": [[...], ...]}
//   {"transformations": [[...], ...], "degree": n}
//   {"partial_injections": [[...], ...], "degree": n}   (null = undefined)
//   {"matrices": [[[...], ...], ...], "q": primepower}
// Matrices: {"field": "Q" | "F<q>", "entries": [[...]]} with rationals as
// "a/b" strings (plain integers also accepted).

#include <json.hpp>

#include "sgconj/conjugacy.hpp"
#include "sgconj/exactla.hpp"
#include "sgconj/semigroup.hpp"

namespace sgconj {

Semigroup semigroup_from_json(const nlohmann::json& j,
                              int cap = kDefaultClosureCap);
nlohmann::json semigroup_to_json(const Semigroup& S);

ExactMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ExactMatrix& M);

nlohmann::json verdict_to_json(const ConjugacyVerdict& v);
nlohmann::json partition_to_json(const Partition& p);

// Egg-box summary: J-classes with sizes, R/L/H class counts, idempotent
// counts and maximal subgroup orders.
nlohmann::json info_to_json(const Semigroup& S, bool pretty_elements = false);

// One-line 1-indexed rendering of a map element, when the semigroup carries
// transformation or partial-injection provenance.
std::optional<std::string> element_pretty(const Semigroup& S, ElementId s);

}  // namespace sgconj

#endif
