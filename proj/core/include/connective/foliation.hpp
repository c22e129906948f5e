#pragma once

#include <vector>

#include "connective/space.hpp"

namespace connective {

// One support carrying an internal and an external structure.
class Foliation {
 public:
  Foliation() = default;
  Foliation(Space internal, Space external);

  int size() const { return internal_.size(); }
  const Space& internal() const { return internal_; }
  const Space& external() const { return external_; }

  friend bool operator==(const Foliation&, const Foliation&) = default;

 private:
  Space internal_;
  Space external_;
};

bool is_regular(const Foliation& z);

// Components of the internal structure, ordered by least member.
std::vector<Subset> leaves(const Foliation& z);

// Index of the leaf containing p, or -1 when p lies in no leaf.
int leaf_of(const std::vector<Subset>& ls, int p);

// Points are leaves; a set of leaves is connected iff its union is externally connected.
Space leaf_space_induced(const Foliation& z);

// External structure restricted to the leaves and collapsed along them.
Space leaf_space_quotient(const Foliation& z);

bool foliation_morphism_check(const PointMap& phi, const Foliation& z, const Foliation& zp, bool strict);

}  // namespace connective
