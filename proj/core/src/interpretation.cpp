#include "connective/interpretation.hpp"

#include <stdexcept>

namespace connective {

namespace {

bool same_category_identity(const Dynamorphism& m, const Dynamics& a, const Dynamics& b) {
  if (!(a.category() == b.category())) throw InputError("interpretation: dynamics over different categories");
  return m.functor == identity_functor(a.category());
}

bool nonempty_disjoint(const Dynamorphism& m) {
  for (const auto& t : m.delta) {
    Subset seen = 0;
    for (Subset s : t.rel()) {
      if (s == 0 || meets(s, seen)) return false;
      seen |= s;
    }
  }
  return true;
}

bool surjective(const Transition& t) {
  Subset hit = 0;
  for (Subset s : t.rel()) hit |= s;
  return hit == full_set(t.target_size());
}

}  // namespace

IncomingFlags interp_in_check(const Dynamorphism& psi, const Dynamics& alpha, const Dynamics& beta) {
  bool identity = same_category_identity(psi, alpha, beta);
  auto fl = dynamorphism_check(psi, alpha, beta);
  if (!fl.quasi_deterministic) throw DomainError("incoming interpretation needs a quasi-deterministic map");
  IncomingFlags out;
  if (!identity || !fl.valid) return out;
  const FinCat& e = alpha.category();
  out.entrante = true;
  out.via_commutation = true;
  for (int f = 0; f < e.arrow_count(); ++f) {
    const Transition& ps = psi.delta[e.dom(f)];
    const Transition& pt = psi.delta[e.cod(f)];
    if (!(compose(pt, compose(alpha.trans(f), converse(ps))) == beta.trans(f))) out.entrante = false;
    if (!(compose(pt, alpha.trans(f)) == compose(beta.trans(f), ps))) out.via_commutation = false;
  }
  for (const auto& t : psi.delta)
    if (!surjective(t)) out.via_commutation = false;
  return out;
}

OutgoingFlags interp_out_check(const Dynamorphism& phi, const Dynamics& beta, const Dynamics& alpha) {
  bool identity = same_category_identity(phi, beta, alpha);
  OutgoingFlags out;
  if (!identity || !is_dynamorphism(phi, beta, alpha) || !nonempty_disjoint(phi)) return out;
  out.sortante = true;
  out.reguliere = true;
  const FinCat& e = beta.category();
  for (int f = 0; f < e.arrow_count(); ++f)
    if (!(compose(alpha.trans(f), phi.delta[e.dom(f)]) == compose(phi.delta[e.cod(f)], beta.trans(f))))
      out.reguliere = false;
  return out;
}

Dynamorphism tilde_of_incoming(const Dynamorphism& psi) {
  Dynamorphism out{psi.functor, {}};
  for (const auto& t : psi.delta) out.delta.push_back(converse(t));
  return out;
}

Dynamorphism tilde_of_outgoing(const Dynamorphism& phi) {
  // Images are disjoint for an outgoing interpretation, so the converse is
  // already at most single-valued.
  return tilde_of_incoming(phi);
}

Association associate_incoming(const Dynamorphism& psi, const Dynamics& alpha, const Dynamics& beta) {
  if (!interp_in_check(psi, alpha, beta).entrante) throw DomainError("not an incoming interpretation");
  Association out{tilde_of_incoming(psi), false, false};
  if (!is_dynamorphism(out.associated, beta, alpha)) return out;
  auto back = interp_out_check(out.associated, beta, alpha);
  if (!back.sortante) throw std::logic_error("converse of an incoming interpretation is a map but not outgoing");
  out.mixte = true;
  out.reguliere = back.reguliere;
  return out;
}

Association associate_outgoing(const Dynamorphism& phi, const Dynamics& beta, const Dynamics& alpha) {
  auto fwd = interp_out_check(phi, beta, alpha);
  if (!fwd.sortante) throw DomainError("not an outgoing interpretation");
  Association out{tilde_of_outgoing(phi), false, false};
  if (!is_dynamorphism(out.associated, alpha, beta)) return out;
  if (!interp_in_check(out.associated, alpha, beta).entrante)
    throw std::logic_error("converse of an outgoing interpretation is a map but not incoming");
  out.mixte = true;
  out.reguliere = fwd.reguliere;
  return out;
}

AcrossFlags interp_trans_check(const Dynamorphism& m, const Dynamics& beta, const Dynamics& alpha) {
  AcrossFlags out;
  if (!is_dynamorphism(m, beta, alpha) || !is_faithful(m.functor, beta.category()) || !nonempty_disjoint(m)) return out;
  out.interpretation = true;
  out.reguliere = true;
  const FinCat& e = beta.category();
  for (int f = 0; f < e.arrow_count(); ++f)
    if (!(compose(m.delta[e.cod(f)], beta.trans(f)) == compose(alpha.trans(m.functor.arrows[f]), m.delta[e.dom(f)])))
      out.reguliere = false;
  return out;
}

}  // namespace connective
