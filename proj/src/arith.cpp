#include "sgconj/arith.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "sgconj/numbers.hpp"

namespace sgconj {

namespace {
constexpr long kModulusBound = 1000000;
}

FieldSpec FieldSpec::finite(long q) {
  if (!prime_power_decompose(q))
    throw_domain("F_" + std::to_string(q) + ": q must be a prime power");
  return FieldSpec{Kind::Finite, q, 0, {}};
}

FieldSpec FieldSpec::custom(long p, std::vector<long> gens) {
  if (p != 0 && !is_prime(p))
    throw_domain("custom field characteristic must be 0 or prime");
  return FieldSpec{Kind::Custom, 0, p, std::move(gens)};
}

long FieldSpec::characteristic() const {
  switch (kind) {
    case Kind::Complex:
    case Kind::Reals:
    case Kind::Rationals:
      return 0;
    case Kind::Finite:
      return prime_power_decompose(q)->first;
    case Kind::Custom:
      return custom_p;
  }
  return 0;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "C") return complex_numbers();
  if (text == "R") return reals();
  if (text == "Q") return rationals();
  if (text.size() > 1 && text[0] == 'F') {
    long q = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw_format("bad field spec: " + text);
      q = q * 10 + (text[i] - '0');
    }
    return finite(q);
  }
  if (text.rfind("custom:", 0) == 0) {
    std::string rest = text.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw_format("bad custom field spec (want custom:<p>:<g1,g2,...>): " + text);
    long p;
    try {
      std::size_t used = 0;
      p = std::stol(rest.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw_format("bad characteristic in field spec: " + text);
    }
    std::vector<long> gens;
    std::string tail = rest.substr(colon + 1);
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        gens.push_back(std::stol(item, &used));
        if (used != item.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw_format("bad generator in field spec: " + text);
      }
    }
    return custom(p, std::move(gens));
  }
  throw_format("unrecognized field spec: " + text);
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::Complex: return "C";
    case Kind::Reals: return "R";
    case Kind::Rationals: return "Q";
    case Kind::Finite: return "F" + std::to_string(q);
    case Kind::Custom: {
      std::ostringstream os;
      os << "custom:" << custom_p << ":";
      for (std::size_t i = 0; i < custom_gens.size(); ++i) {
        if (i) os << ',';
        os << custom_gens[i];
      }
      return os.str();
    }
  }
  return "?";
}

CrtExponents crt_exponents(long N, long p) {
  if (N < 1) throw_domain("crt_exponents: N must be positive");
  if (!is_prime(p)) throw_domain("crt_exponents: p must be prime");
  long pk = 1;
  long r = N;
  while (r % p == 0) {
    pk *= p;
    r /= p;
  }
  // Solutions are unique mod N = pk * r; find them by direct scan of the
  // residues 1..N (N is an element order here, so this is cheap and obvious).
  CrtExponents out{0, 0};
  for (long m = 1; m <= N; ++m)
    if (m % pk == 1 % pk && m % r == 0) {
      out.m = m;
      break;
    }
  for (long n = 1; n <= N; ++n)
    if (n % pk == 0 && n % r == 1 % r) {
      out.n = n;
      break;
    }
  if (out.m == 0 || out.n == 0) throw_domain("crt_exponents: no solution found");
  return out;
}

bool GaloisSubgroup::contains(long j) const {
  long rep = residue_rep(j, modulus);
  return std::binary_search(members.begin(), members.end(), rep);
}

bool GaloisSubgroup::is_full_unit_group() const {
  long count = 0;
  for (long a = 1; a <= modulus; ++a)
    if (std::gcd(a % modulus == 0 ? modulus : a, modulus) == 1) ++count;
  return static_cast<long>(members.size()) == count;
}

namespace {

GaloisSubgroup generated_subgroup(long n, std::vector<long> gens) {
  GaloisSubgroup h;
  h.modulus = n;
  std::set<long> members;
  std::deque<long> queue;
  long one = residue_rep(1, n);
  members.insert(one);
  queue.push_back(one);
  std::vector<long> reduced;
  for (long g : gens) {
    long rep = residue_rep(g, n);
    if (std::gcd(rep % n == 0 ? n : rep % n, n) != 1)
      throw_domain("generator " + std::to_string(g) + " is not a unit mod " +
                   std::to_string(n));
    reduced.push_back(rep);
  }
  while (!queue.empty()) {
    long a = queue.front();
    queue.pop_front();
    for (long g : reduced) {
      long prod = residue_rep(a * g, n);
      if (members.insert(prod).second) queue.push_back(prod);
    }
  }
  h.members.assign(members.begin(), members.end());
  h.generators = std::move(reduced);
  return h;
}

}  // namespace

GaloisSubgroup galois_subgroup(const FieldSpec& field, long n) {
  if (n < 1) throw_domain("galois_subgroup: modulus must be positive");
  if (n > kModulusBound)
    throw_domain("galois_subgroup: modulus exceeds the supported bound");
  switch (field.kind) {
    case FieldSpec::Kind::Complex:
      return generated_subgroup(n, {});
    case FieldSpec::Kind::Reals:
      return generated_subgroup(n, {n - 1});
    case FieldSpec::Kind::Rationals: {
      GaloisSubgroup h;
      h.modulus = n;
      for (long a = 1; a <= n; ++a)
        if (std::gcd(a % n == 0 ? n : a, n) == 1) h.members.push_back(a);
      h.generators = {};
      return h;
    }
    case FieldSpec::Kind::Finite: {
      long p = field.characteristic();
      if (n % p == 0)
        throw_domain("F_" + std::to_string(field.q) +
                     ": characteristic divides the modulus " + std::to_string(n));
      return generated_subgroup(n, {field.q});
    }
    case FieldSpec::Kind::Custom:
      return generated_subgroup(n, field.custom_gens);
  }
  throw_domain("galois_subgroup: unknown field kind");
}

PRegularParts p_regular_parts(const Semigroup& S, ElementId s, long p) {
  if (p != 0 && !is_prime(p))
    throw_domain("characteristic must be 0 or prime, got " + std::to_string(p));
  ElementId omega = S.omega_plus(s, 0);
  ElementId omega1 = S.omega_plus(s, 1);
  if (p == 0) return PRegularParts{omega, omega1};
  long order = S.group_element_order(omega1);
  CrtExponents mn = crt_exponents(order, p);
  return PRegularParts{S.power(omega1, static_cast<unsigned long long>(mn.m)),
                       S.power(omega1, static_cast<unsigned long long>(mn.n))};
}

}  // namespace sgconj
