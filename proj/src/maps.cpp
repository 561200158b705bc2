#include "sgconj/maps.hpp"

#include <algorithm>
#include <sstream>

namespace sgconj {

Transformation Transformation::identity(int n) {
  Transformation t;
  t.img.resize(n);
  for (int i = 0; i < n; ++i) t.img[i] = i;
  return t;
}

Transformation Transformation::checked(std::vector<int> img) {
  int n = static_cast<int>(img.size());
  if (n == 0) throw_format("transformation of degree 0");
  for (int v : img)
    if (v < 0 || v >= n)
      throw_format("transformation image point out of range (0-indexed)");
  return Transformation{std::move(img)};
}

PartialInjection PartialInjection::identity(int n) {
  PartialInjection t;
  t.img.resize(n);
  for (int i = 0; i < n; ++i) t.img[i] = i;
  return t;
}

PartialInjection PartialInjection::empty(int n) {
  PartialInjection t;
  t.img.assign(n, kUndefined);
  return t;
}

PartialInjection PartialInjection::checked(std::vector<int> img) {
  int n = static_cast<int>(img.size());
  if (n == 0) throw_format("partial injection of degree 0");
  std::vector<bool> seen(n, false);
  for (int v : img) {
    if (v == kUndefined) continue;
    if (v < 0 || v >= n)
      throw_format("partial injection image point out of range (0-indexed)");
    if (seen[v]) throw_format("partial injection repeats an image point");
    seen[v] = true;
  }
  return PartialInjection{std::move(img)};
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree())
    throw_format("composing transformations of different degrees");
  Transformation r;
  r.img.resize(g.degree());
  for (int i = 0; i < g.degree(); ++i) r.img[i] = f.img[g.img[i]];
  return r;
}

PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
  if (f.degree() != g.degree())
    throw_format("composing partial injections of different degrees");
  PartialInjection r;
  r.img.resize(g.degree());
  for (int i = 0; i < g.degree(); ++i) {
    int mid = g.img[i];
    r.img[i] = (mid == PartialInjection::kUndefined) ? PartialInjection::kUndefined
                                                     : f.img[mid];
  }
  return r;
}

int map_rank(const Transformation& f) {
  std::vector<bool> hit(f.degree(), false);
  int r = 0;
  for (int v : f.img)
    if (!hit[v]) {
      hit[v] = true;
      ++r;
    }
  return r;
}

int map_rank(const PartialInjection& f) {
  int r = 0;
  for (int v : f.img)
    if (v != PartialInjection::kUndefined) ++r;
  return r;
}

std::string one_line(const Transformation& f) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < f.degree(); ++i) {
    if (i) os << ',';
    os << f.img[i] + 1;
  }
  os << ']';
  return os.str();
}

std::string one_line(const PartialInjection& f) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < f.degree(); ++i) {
    if (i) os << ',';
    if (f.defined(i))
      os << f.img[i] + 1;
    else
      os << '-';
  }
  os << ']';
  return os.str();
}

}  // namespace sgconj
