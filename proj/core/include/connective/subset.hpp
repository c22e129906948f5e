#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "connective/errors.hpp"

namespace connective {

// Subsets of a finite support {0..n-1} are bitmasks; bit i set means point i.
using Subset = std::uint64_t;

inline constexpr int kMaxPoints = 63;

inline constexpr Subset kEmpty = 0;

constexpr Subset singleton(int i) { return Subset{1} << i; }

constexpr Subset full_set(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

constexpr bool has(Subset s, int i) { return (s >> i) & 1U; }

constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr bool meets(Subset a, Subset b) { return (a & b) != 0; }

constexpr int cardinality(Subset s) { return std::popcount(s); }

constexpr int least_point(Subset s) { return std::countr_zero(s); }

inline void check_points(int n) {
  if (n < 0) throw InputError("negative point count");
  if (n > kMaxPoints) throw CapacityError("more than 63 points: " + std::to_string(n));
}

inline Subset subset_of(std::initializer_list<int> pts) {
  Subset s = 0;
  for (int p : pts) s |= singleton(p);
  return s;
}

inline Subset subset_of(const std::vector<int>& pts) {
  Subset s = 0;
  for (int p : pts) {
    if (p < 0 || p > kMaxPoints - 1) throw InputError("point index out of range: " + std::to_string(p));
    s |= singleton(p);
  }
  return s;
}

inline std::vector<int> points_of(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s) {
    out.push_back(least_point(s));
    s &= s - 1;
  }
  return out;
}

// Order used for any externally visible listing: by size, then by the sorted
// list of points.
inline bool display_less(Subset a, Subset b) {
  int ca = cardinality(a), cb = cardinality(b);
  if (ca != cb) return ca < cb;
  return points_of(a) < points_of(b);
}

// A set of subsets, kept sorted and unique so that == is set equality.
class Family {
 public:
  Family() = default;
  Family(std::initializer_list<Subset> xs) : items_(xs) { normalize(); }
  explicit Family(std::vector<Subset> xs) : items_(std::move(xs)) { normalize(); }

  bool contains(Subset s) const { return std::binary_search(items_.begin(), items_.end(), s); }
  void insert(Subset s) {
    auto it = std::lower_bound(items_.begin(), items_.end(), s);
    if (it == items_.end() || *it != s) items_.insert(it, s);
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Subset>& items() const { return items_; }

  Subset union_all() const {
    Subset u = 0;
    for (Subset s : items_) u |= s;
    return u;
  }

  std::vector<Subset> display_order() const {
    std::vector<Subset> v = items_;
    std::sort(v.begin(), v.end(), display_less);
    return v;
  }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  std::vector<Subset> items_;
};

}  // namespace connective
