#pragma once

#include "connective/dynamics.hpp"
#include "connective/foliation.hpp"
#include "connective/order.hpp"

namespace connective {

// A proper dynamics with a structure on its arrows and one on its states
// (global state indices, so at most 63 states).
struct ConnDynamics {
  Dynamics dynamics;
  Family arrow_connected;
  Family state_connected;
};

// With categorical set, the arrow structure must also be closed under
// arrow-set composition.
bool conndyn_validate(const ConnDynamics& cd, bool categorical = false);

// States reached from state s through some arrow of the set.
Subset reach(const Dynamics& a, Subset arrows, int s);

// Internal structure generated by the reach sets of all connected arrow sets,
// external structure given by the state structure.
Foliation dyn_foliation(const ConnDynamics& cd);

FiniteOrdinal dyn_order(const ConnDynamics& cd);

}  // namespace connective
