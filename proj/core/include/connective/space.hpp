#pragma once

#include <span>
#include <utility>
#include <vector>

#include "connective/subset.hpp"

namespace connective {

// Total map between finite supports: f[i] is the image of point i.
using PointMap = std::vector<int>;

bool validate_structure(int n, const Family& fam);

// Least structure containing fam; with integral set, all singletons too.
Family generate(int n, const Family& fam, bool integral);

// A finite set with a valid connectivity structure. Construction validates.
class Space {
 public:
  Space() : n_(0), connected_({kEmpty}) {}
  Space(int n, Family connected);

  static Space desintegrated(int n);
  static Space discrete(int n);  // integral: ∅ and the singletons
  static Space grossier(int n);  // every subset

  int size() const { return n_; }
  Subset support() const { return full_set(n_); }
  const Family& connected() const { return connected_; }
  bool is_connected(Subset s) const { return connected_.contains(s); }
  bool is_integral() const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  struct Trusted {};
  Space(int n, Family connected, Trusted) : n_(n), connected_(std::move(connected)) {}
  friend Space trusted_space(int n, Family connected);

  int n_;
  Family connected_;
};

// Skips the O(|κ|²) axiom check; only for families produced by generate or by
// constructions that preserve the axioms.
Space trusted_space(int n, Family connected);

struct Components {
  std::vector<Subset> components;  // ordered by least member
  Subset absent = 0;
};

Components connected_components(const Space& sp);

Space induced(const Space& sp, Subset a);

Subset image(const PointMap& f, Subset s);

Space initial_structure(const PointMap& f, const Space& target, int n);
Space final_structure(const PointMap& f, const Space& source, int m, bool integral);

// Disjoint nonempty classes; points outside every class are absent.
class PartialEquiv {
 public:
  PartialEquiv() = default;
  PartialEquiv(int n, std::vector<Subset> classes);

  int size() const { return n_; }
  const std::vector<Subset>& classes() const { return classes_; }
  Subset present() const;
  bool is_total() const { return present() == full_set(n_); }
  // Index of the class containing point p; -1 if p is absent.
  int class_of(int p) const;
  // Canonical surjection onto class indices (absent points map to -1).
  PointMap projection() const;

  friend bool operator==(const PartialEquiv&, const PartialEquiv&) = default;

 private:
  int n_ = 0;
  std::vector<Subset> classes_;
};

Space quotient(const Space& sp, const PartialEquiv& eq);
Space quotient_partial(const Space& sp, const PartialEquiv& pe);
Space structural_quotient(const Space& sp, const PartialEquiv& eq);

Space saturate(const Space& sp);
PartialEquiv pe_of_structure(const Space& sp);
Space space_from_partial_equiv(int n, const PartialEquiv& pe);

struct SeparatingPair {
  Subset first = 0;
  Subset second = 0;
  friend auto operator<=>(const SeparatingPair&, const SeparatingPair&) = default;
};

// Unordered pairs, stored with first < second and sorted.
class SeparationDevice {
 public:
  SeparationDevice() = default;
  SeparationDevice(int n, std::vector<SeparatingPair> pairs);

  int size() const { return n_; }
  const std::vector<SeparatingPair>& pairs() const { return pairs_; }
  friend bool operator==(const SeparationDevice&, const SeparationDevice&) = default;

 private:
  int n_ = 0;
  std::vector<SeparatingPair> pairs_;
};

bool separated(const SeparationDevice& dev, Subset a);
Space space_from_device(int n, const SeparationDevice& dev);
SeparationDevice canonical_device(const Space& sp);

Space lattice_meet(int n, std::span<const Space> spaces);
Space lattice_join(int n, std::span<const Space> spaces, bool integral);

bool morphism_check(const PointMap& f, const Space& x, const Space& y);

Space graph_to_space(int n, std::span<const std::pair<int, int>> edges);

// Enumeration limits for operations whose output is exponential in n.
inline constexpr int kMaxEnumeratedPoints = 22;

}  // namespace connective
