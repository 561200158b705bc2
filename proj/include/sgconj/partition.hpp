#ifndef SGCONJ_PARTITION_HPP
#define SGCONJ_PARTITION_HPP

#include <algorithm>
#include <vector>

namespace sgconj {

// Canonical partition of {0, ..., n-1}: classes are ascending and ordered by
// their least member, so equal partitions compare equal structurally.
struct Partition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  static Partition from_class_of(const std::vector<int>& labels) {
    Partition p;
    p.class_of.assign(labels.size(), -1);
    std::vector<int> remap;
    std::vector<int> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int lab = labels[i];
      int idx = -1;
      for (std::size_t k = 0; k < seen.size(); ++k)
        if (seen[k] == lab) {
          idx = static_cast<int>(k);
          break;
        }
      if (idx < 0) {
        idx = static_cast<int>(seen.size());
        seen.push_back(lab);
        p.classes.emplace_back();
      }
      p.class_of[i] = idx;
      p.classes[idx].push_back(static_cast<int>(i));
    }
    return p;
  }

  std::vector<std::size_t> class_sizes_sorted() const {
    std::vector<std::size_t> s;
    s.reserve(classes.size());
    for (const auto& c : classes) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  }

  bool same_class(int a, int b) const { return class_of[a] == class_of[b]; }

  // Every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const {
    for (const auto& c : classes)
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!coarser.same_class(c[0], c[i])) return false;
    return true;
  }

  bool operator==(const Partition& o) const { return classes == o.classes; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
};

}  // namespace sgconj

#endif
