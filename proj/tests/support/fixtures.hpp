#pragma once

#include <string>

#include "connective/conndyn.hpp"
#include "connective/dynamics.hpp"
#include "connective/foliation.hpp"
#include "connective/space.hpp"

namespace fx {

using namespace connective;

Space borromean();        // three points, only the whole set beyond singletons
Space three_nonintegral();  // {0}, {1} and the whole set
Space path3();            // path graph 0 - 1 - 2
Space chain_space(int n);  // initial segments {0..k}
Foliation three_leaves();  // leaves {0,1},{2,3},{4,5}; external {0,2},{3,5}

FinCat arrow2();  // S -> T

Dynamics dynamics(const std::string& json_text);
Dynamorphism morphism(const std::string& json_text, const Dynamics& src, const Dynamics& dst);

// p -> q over S -> T.
Dynamics observed();

struct Interpretation {
  Dynamics model;
  Dynamorphism map;  // model -> observed for incoming cases, observed -> model otherwise
};
Interpretation mixed_irregular();     // incoming, converse is a dynamorphism
Interpretation incoming_not_mixed();  // incoming, converse is not a dynamorphism
Interpretation outgoing_regular();
Interpretation outgoing_irregular();
Interpretation outgoing_rejected();   // the generalised, invalid case

// The two incoming counterexamples: commuting but not surjective, and
// surjective but not explaining every transition.
struct IncomingCase {
  Dynamics model;
  Dynamics observed;
  Dynamorphism map;
};
IncomingCase not_surjective();
IncomingCase not_explaining();
// Two model states folded onto one observed state, one of them without a
// transition: the defining equation holds, the squares do not commute.
IncomingCase fold_counterexample();

// Step-by-one dynamics on six states along the chain 0 -> ... -> 5, arrow
// structure generated by {id_k, k -> k+1}, state structure the 6-cycle.
ConnDynamics rotation();
// Cyclic group of order 3 acting on two 3-cycles; each cycle and their union
// are externally connected.
ConnDynamics linked_leaves();

}  // namespace fx
