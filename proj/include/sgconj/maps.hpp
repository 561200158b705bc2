#ifndef SGCONJ_MAPS_HPP
#define SGCONJ_MAPS_HPP

// Concrete semigroup elements: total transformations and partial injections
// on {0, ..., n-1}. The product convention throughout the project is
// (f*g)(x) = f(g(x)) -- apply the right factor first -- so that the standard
// matrix representation is multiplicative.

#include <string>
#include <vector>

#include "sgconj/errors.hpp"

namespace sgconj {

struct Transformation {
  std::vector<int> img;  // img[i] = f(i), 0-indexed

  int degree() const { return static_cast<int>(img.size()); }

  static Transformation identity(int n);
  // Validates entries; throws FormatError.
  static Transformation checked(std::vector<int> img);

  bool operator==(const Transformation& o) const { return img == o.img; }
  bool operator<(const Transformation& o) const { return img < o.img; }
};

struct PartialInjection {
  static constexpr int kUndefined = -1;
  std::vector<int> img;  // kUndefined where the map is not defined

  int degree() const { return static_cast<int>(img.size()); }
  bool defined(int i) const { return img[i] != kUndefined; }

  static PartialInjection identity(int n);
  static PartialInjection empty(int n);
  // Validates range and injectivity; throws FormatError.
  static PartialInjection checked(std::vector<int> img);

  bool operator==(const PartialInjection& o) const { return img == o.img; }
  bool operator<(const PartialInjection& o) const { return img < o.img; }
};

Transformation compose(const Transformation& f, const Transformation& g);
PartialInjection compose(const PartialInjection& f, const PartialInjection& g);

// |Im f| (= size of the domain for a partial injection).
int map_rank(const Transformation& f);
int map_rank(const PartialInjection& f);

// One-line notation, 1-indexed, e.g. "[2,3,1]" / "[2,-,1]".
std::string one_line(const Transformation& f);
std::string one_line(const PartialInjection& f);

}  // namespace sgconj

#endif
