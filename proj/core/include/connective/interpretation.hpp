#pragma once

#include "connective/dynamics.hpp"

namespace connective {

// Interpretations of an observed dynamics beta by a dynamics alpha over the
// same category. Incoming maps go alpha -> beta, outgoing maps beta -> alpha.

struct IncomingFlags {
  bool entrante = false;
  bool via_commutation = false;  // commuting squares plus surjective components
};

// psi must be quasi-deterministic (DomainError otherwise). The two flags are
// computed independently. They agree when every component of psi is
// injective; when two states share an image, the equation can hold while the
// squares do not commute.
IncomingFlags interp_in_check(const Dynamorphism& psi, const Dynamics& alpha, const Dynamics& beta);

struct OutgoingFlags {
  bool sortante = false;
  bool reguliere = false;
};

OutgoingFlags interp_out_check(const Dynamorphism& phi, const Dynamics& beta, const Dynamics& alpha);

// Converse family of an incoming map.
Dynamorphism tilde_of_incoming(const Dynamorphism& psi);
// r -> {s} when r ∈ phi_S(s), r -> ∅ otherwise.
Dynamorphism tilde_of_outgoing(const Dynamorphism& phi);

struct Association {
  Dynamorphism associated;
  bool mixte = false;
  bool reguliere = false;
};

Association associate_incoming(const Dynamorphism& psi, const Dynamics& alpha, const Dynamics& beta);
Association associate_outgoing(const Dynamorphism& phi, const Dynamics& beta, const Dynamics& alpha);

struct AcrossFlags {
  bool interpretation = false;
  bool reguliere = false;
};

// m: beta -> alpha between dynamics over possibly different categories.
AcrossFlags interp_trans_check(const Dynamorphism& m, const Dynamics& beta, const Dynamics& alpha);

}  // namespace connective
