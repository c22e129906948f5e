#include "connective/conndyn.hpp"

#include "connective/conncat.hpp"

namespace connective {

namespace {

void check_shape(const ConnDynamics& cd) {
  if (cd.dynamics.state_count() > kMaxPoints) throw CapacityError("connective dynamics limited to 63 states");
  if (cd.dynamics.category().arrow_count() > kMaxPoints) throw CapacityError("connective dynamics limited to 63 arrows");
}

}  // namespace

bool conndyn_validate(const ConnDynamics& cd, bool categorical) {
  check_shape(cd);
  const Dynamics& a = cd.dynamics;
  if (!is_proper(a) || !dynamics_validate(a)) return false;
  if (!validate_structure(a.category().arrow_count(), cd.arrow_connected)) return false;
  if (!validate_structure(a.state_count(), cd.state_connected)) return false;
  return !categorical || conncat_validate(a.category(), cd.arrow_connected);
}

Subset reach(const Dynamics& a, Subset arrows, int s) {
  const FinCat& c = a.category();
  Subset out = 0;
  for (int f : points_of(arrows)) {
    int i = a.local(c.dom(f), s);
    if (i < 0) continue;
    for (int j : points_of(a.trans(f)(i))) out |= singleton(a.states(c.cod(f))[j]);
  }
  return out;
}

Foliation dyn_foliation(const ConnDynamics& cd) {
  check_shape(cd);
  const Dynamics& a = cd.dynamics;
  if (!is_proper(a)) throw DomainError("connective dynamics must be proper");
  const int n = a.state_count();
  std::vector<Subset> xs;
  for (Subset k : cd.arrow_connected)
    for (int s = 0; s < n; ++s)
      if (Subset r = reach(a, k, s)) xs.push_back(r);
  Space internal = trusted_space(n, generate(n, Family(std::move(xs)), false));
  return Foliation(std::move(internal), Space(n, cd.state_connected));
}

FiniteOrdinal dyn_order(const ConnDynamics& cd) { return connectivity_order(leaf_space_induced(dyn_foliation(cd))); }

}  // namespace connective
