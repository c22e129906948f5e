#pragma once

#include <vector>

#include "connective/foliation.hpp"
#include "connective/space.hpp"

namespace connective {

// Each object point is sent to a subset of the ambient space. Nonemptiness and
// connectivity are checked by rep_validate, not at construction, so that
// invalid inputs can be reported rather than rejected.
class Representation {
 public:
  Representation() = default;
  Representation(Space object, Space ambient, std::vector<Subset> map);

  const Space& object() const { return object_; }
  const Space& ambient() const { return ambient_; }
  const std::vector<Subset>& map() const { return map_; }
  Subset operator()(int a) const { return map_[a]; }

  // Union of the images of the points of a.
  Subset image_union(Subset a) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Space object_;
  Space ambient_;
  std::vector<Subset> map_;
};

// With connected_images set, every single image must itself be connected.
bool rep_validate(const Representation& rho, bool connected_images = false);
bool is_clear(const Representation& rho);
bool is_distinct(const Representation& rho);

// Kleisli composite: (tau . rho)(x) is the union of tau over rho(x).
Representation compose(const Representation& tau, const Representation& rho);

// x -> {x} on a space.
Representation unit(const Space& x);

// Pairs each point x of X with {x, x + n} in an integral ambient on 2n points.
Representation canonical_double(const Space& x);

struct RepMorphism {
  PointMap alpha;  // on object points
  PointMap beta;   // on ambient points
  friend bool operator==(const RepMorphism&, const RepMorphism&) = default;
};

bool rep_morphism_check(const RepMorphism& m, const Representation& rho, const Representation& rhop);
RepMorphism compose(const RepMorphism& second, const RepMorphism& first);
RepMorphism identity_morphism(const Representation& rho);

// The doubling applied to a morphism f: X -> Y.
RepMorphism canonical_double_on_morphism(const PointMap& f, const Space& x, const Space& y);

enum class StructureSelector { Desintegrated, Own, Grossier };

// Internal structure generated, for each object point a, by the selected
// connected subsets of its image; points with connected singletons use the
// second selector, the others the first.
Foliation phi(const Representation& rho, StructureSelector for_other, StructureSelector for_connected);

inline const PointMap& phi_on_morphism(const RepMorphism& m) { return m.beta; }

Representation r_down(const Foliation& z);
RepMorphism r_down_on_morphism(const PointMap& phi, const Foliation& z, const Foliation& zp);

Representation r_up(const Foliation& z);
RepMorphism r_up_on_morphism(const PointMap& phi, const Foliation& z, const Foliation& zp);

// Transposes between morphisms r_down(z) -> rho and foliation morphisms
// z -> phi(rho, Own, Own).
PointMap adjunction_transpose_fwd(const RepMorphism& m);
RepMorphism adjunction_transpose_bwd(const PointMap& beta, const Foliation& z, const Representation& rho);

inline constexpr int kMaxAdjunctionPoints = 6;

std::vector<RepMorphism> hom_down(const Foliation& z, const Representation& rho);
std::vector<PointMap> hom_phi(const Foliation& z, const Representation& rho);

struct AdjunctionReport {
  std::size_t hom_left = 0;
  std::size_t hom_right = 0;
  bool bijection = false;
};

AdjunctionReport adjunction_verify(const Foliation& z, const Representation& rho);

// Square for a foliation morphism phi: zp -> z, checked over every morphism
// r_down(z) -> rho.
bool naturality_in_foliation(const PointMap& phi, const Foliation& zp, const Foliation& z, const Representation& rho);

// Square for a representation morphism m: rho -> rhop, checked over every
// foliation morphism z -> phi(rho).
bool naturality_in_representation(const RepMorphism& m, const Foliation& z, const Representation& rho,
                                  const Representation& rhop);

struct LeafFormIso {
  Representation leaf_form;  // r_down(phi(rho, Grossier, Grossier))
  RepMorphism forward;       // rho -> leaf_form
  RepMorphism backward;      // leaf_form -> rho
};

LeafFormIso leaf_form_iso(const Representation& rho);

}  // namespace connective
