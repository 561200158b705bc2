#ifndef SGCONJ_RATIONAL_HPP
#define SGCONJ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "sgconj/errors.hpp"

namespace sgconj {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "a" or "a/b" with optional sign.
inline Rational parse_rational(const std::string& s) {
  auto parse_int = [](const std::string& t) -> BigInt {
    if (t.empty()) throw_format("empty integer in rational literal");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw_format("bare sign in rational literal");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw_format("invalid rational literal: " + t);
    return BigInt(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw_format("zero denominator in rational literal: " + s);
  return Rational(num, den);
}

inline std::string format_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace sgconj

#endif
