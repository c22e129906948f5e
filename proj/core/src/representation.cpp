#include "connective/representation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace connective {

namespace {

void for_each_map(int n, int m, const std::function<void(const PointMap&)>& fn) {
  if (n > 0 && m == 0) return;
  PointMap f(n, 0);
  while (true) {
    fn(f);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return;
  }
}

PointMap compose_maps(const PointMap& second, const PointMap& first) {
  PointMap out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

void append_selected(Subset whole, const Family& structure, StructureSelector sel, std::vector<Subset>& out) {
  switch (sel) {
    case StructureSelector::Desintegrated:
      break;
    case StructureSelector::Own:
      for (Subset k : structure)
        if (is_subset(k, whole)) out.push_back(k);
      break;
    case StructureSelector::Grossier:
      if (cardinality(whole) > kMaxEnumeratedPoints) throw CapacityError("grossier selector on a large image");
      for (Subset s = whole; s; s = (s - 1) & whole) out.push_back(s);
      break;
  }
}

int rank(StructureSelector s) { return static_cast<int>(s); }

void check_adjunction_caps(const Foliation& z, const Representation& rho) {
  if (z.size() > kMaxAdjunctionPoints || rho.object().size() > kMaxAdjunctionPoints ||
      rho.ambient().size() > kMaxAdjunctionPoints)
    throw CapacityError("adjunction enumeration is limited to 6 points per support");
}

}  // namespace

Representation::Representation(Space object, Space ambient, std::vector<Subset> map)
    : object_(std::move(object)), ambient_(std::move(ambient)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != object_.size()) throw InputError("representation map size differs from object size");
  for (Subset s : map_)
    if (!is_subset(s, ambient_.support())) throw InputError("representation image outside ambient support");
}

Subset Representation::image_union(Subset a) const {
  Subset out = 0;
  for (int p : points_of(a)) out |= map_[p];
  return out;
}

bool rep_validate(const Representation& rho, bool connected_images) {
  for (Subset s : rho.map()) {
    if (s == 0) return false;
    if (connected_images && !rho.ambient().is_connected(s)) return false;
  }
  for (Subset k : rho.object().connected())
    if (!rho.ambient().is_connected(rho.image_union(k))) return false;
  return true;
}

bool is_clear(const Representation& rho) {
  const int n = rho.object().size();
  if (n > kMaxEnumeratedPoints) throw CapacityError("clarity check over too many points");
  for (Subset a = 0; a <= full_set(n); ++a)
    if (!rho.object().is_connected(a) && rho.ambient().is_connected(rho.image_union(a))) return false;
  return true;
}

bool is_distinct(const Representation& rho) {
  Subset seen = 0;
  for (Subset s : rho.map()) {
    if (meets(s, seen)) return false;
    seen |= s;
  }
  return true;
}

Representation compose(const Representation& tau, const Representation& rho) {
  if (!(rho.ambient() == tau.object())) throw InputError("compose: ambient of the first is not the object of the second");
  std::vector<Subset> map;
  for (Subset s : rho.map()) map.push_back(tau.image_union(s));
  return Representation(rho.object(), tau.ambient(), std::move(map));
}

Representation unit(const Space& x) {
  std::vector<Subset> map;
  for (int i = 0; i < x.size(); ++i) map.push_back(singleton(i));
  return Representation(x, x, std::move(map));
}

Representation canonical_double(const Space& x) {
  const int n = x.size();
  if (2 * n > kMaxPoints) throw CapacityError("doubling needs 2n <= 63 points");
  std::vector<Subset> map;
  for (int i = 0; i < n; ++i) map.push_back(singleton(i) | singleton(i + n));
  std::vector<Subset> xs;
  for (Subset k : x.connected()) xs.push_back(k | (k << n));
  Space ambient = trusted_space(2 * n, generate(2 * n, Family(std::move(xs)), true));
  return Representation(x, std::move(ambient), std::move(map));
}

bool rep_morphism_check(const RepMorphism& m, const Representation& rho, const Representation& rhop) {
  if (!morphism_check(m.alpha, rho.object(), rhop.object())) return false;
  if (!morphism_check(m.beta, rho.ambient(), rhop.ambient())) return false;
  for (int a = 0; a < rho.object().size(); ++a)
    if (!is_subset(image(m.beta, rho(a)), rhop(m.alpha[a]))) return false;
  return true;
}

RepMorphism compose(const RepMorphism& second, const RepMorphism& first) {
  return {compose_maps(second.alpha, first.alpha), compose_maps(second.beta, first.beta)};
}

RepMorphism identity_morphism(const Representation& rho) {
  RepMorphism m;
  for (int i = 0; i < rho.object().size(); ++i) m.alpha.push_back(i);
  for (int i = 0; i < rho.ambient().size(); ++i) m.beta.push_back(i);
  return m;
}

RepMorphism canonical_double_on_morphism(const PointMap& f, const Space& x, const Space& y) {
  if (static_cast<int>(f.size()) != x.size()) throw InputError("map size differs from source size");
  RepMorphism m{f, PointMap(2 * x.size())};
  for (int i = 0; i < x.size(); ++i) {
    m.beta[i] = f[i];
    m.beta[i + x.size()] = f[i] + y.size();
  }
  return m;
}

Foliation phi(const Representation& rho, StructureSelector for_other, StructureSelector for_connected) {
  if (rank(for_other) > rank(for_connected)) throw InputError("phi: first selector must be finer than the second");
  const Space& amb = rho.ambient();
  std::vector<Subset> xs;
  for (int a = 0; a < rho.object().size(); ++a) {
    StructureSelector sel = rho.object().is_connected(singleton(a)) ? for_connected : for_other;
    append_selected(rho(a), amb.connected(), sel, xs);
  }
  Space internal = trusted_space(amb.size(), generate(amb.size(), Family(std::move(xs)), false));
  return Foliation(std::move(internal), amb);
}

Representation r_down(const Foliation& z) {
  Space object = leaf_space_induced(z);
  Representation rho(std::move(object), z.external(), leaves(z));
  if (!is_distinct(rho) || (rho.object().size() <= kMaxEnumeratedPoints && !is_clear(rho)))
    throw std::logic_error("r_down produced a representation that is not clear and distinct");
  return rho;
}

RepMorphism r_down_on_morphism(const PointMap& phi, const Foliation& z, const Foliation& zp) {
  if (!foliation_morphism_check(phi, z, zp, false)) throw DomainError("r_down_on_morphism: not a foliation morphism");
  auto target = leaves(zp);
  RepMorphism m{{}, phi};
  for (Subset f : leaves(z)) {
    Subset img = image(phi, f);
    int i = leaf_of(target, least_point(img));
    if (i < 0 || !is_subset(img, target[i])) throw DomainError("r_down_on_morphism: leaf image not inside one leaf");
    m.alpha.push_back(i);
  }
  return m;
}

Representation r_up(const Foliation& z) {
  std::vector<Subset> xs(z.internal().connected().begin(), z.internal().connected().end());
  xs.insert(xs.end(), z.external().connected().begin(), z.external().connected().end());
  Space ambient = trusted_space(z.size(), generate(z.size(), Family(std::move(xs)), false));
  return Representation(leaf_space_quotient(z), std::move(ambient), leaves(z));
}

RepMorphism r_up_on_morphism(const PointMap& phi, const Foliation& z, const Foliation& zp) {
  return r_down_on_morphism(phi, z, zp);
}

PointMap adjunction_transpose_fwd(const RepMorphism& m) { return m.beta; }

RepMorphism adjunction_transpose_bwd(const PointMap& beta, const Foliation& z, const Representation& rho) {
  RepMorphism m{{}, beta};
  for (Subset f : leaves(z)) {
    Subset img = image(beta, f);
    int found = -1;
    for (int a = 0; a < rho.object().size(); ++a) {
      if (!is_subset(img, rho(a))) continue;
      if (found >= 0) throw DomainError("transpose: leaf image lies in two images; representation is not distinct");
      found = a;
    }
    if (found < 0) throw DomainError("transpose: leaf image lies in no single image");
    m.alpha.push_back(found);
  }
  return m;
}

std::vector<RepMorphism> hom_down(const Foliation& z, const Representation& rho) {
  check_adjunction_caps(z, rho);
  Representation down = r_down(z);
  auto ls = leaves(z);
  const int k = static_cast<int>(ls.size());
  const int p = rho.object().size();
  std::vector<RepMorphism> out;
  for_each_map(z.size(), rho.ambient().size(), [&](const PointMap& beta) {
    if (!morphism_check(beta, z.external(), rho.ambient())) return;
    std::vector<std::vector<int>> cand(k);
    for (int i = 0; i < k; ++i) {
      Subset img = image(beta, ls[i]);
      for (int a = 0; a < p; ++a)
        if (is_subset(img, rho(a))) cand[i].push_back(a);
      if (cand[i].empty()) return;
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      PointMap alpha(k);
      for (int i = 0; i < k; ++i) alpha[i] = cand[i][idx[i]];
      if (morphism_check(alpha, down.object(), rho.object())) out.push_back({alpha, beta});
      int i = 0;
      while (i < k && ++idx[i] == cand[i].size()) idx[i++] = 0;
      if (i == k) break;
    }
  });
  return out;
}

std::vector<PointMap> hom_phi(const Foliation& z, const Representation& rho) {
  check_adjunction_caps(z, rho);
  Foliation target = phi(rho, StructureSelector::Own, StructureSelector::Own);
  std::vector<PointMap> out;
  for_each_map(z.size(), rho.ambient().size(), [&](const PointMap& beta) {
    if (foliation_morphism_check(beta, z, target, false)) out.push_back(beta);
  });
  return out;
}

namespace {

void check_adjunction_pre(const Foliation& z, const Representation& rho) {
  if (!is_regular(z)) throw DomainError("adjunction: foliation is not regular");
  if (!rep_validate(rho)) throw DomainError("adjunction: representation is not valid");
  if (!rho.object().is_integral() || !is_distinct(rho) || !is_clear(rho))
    throw DomainError("adjunction: representation must be clear, distinct, with integral object");
}

}  // namespace

AdjunctionReport adjunction_verify(const Foliation& z, const Representation& rho) {
  check_adjunction_caps(z, rho);
  check_adjunction_pre(z, rho);
  auto left = hom_down(z, rho);
  auto right = hom_phi(z, rho);
  AdjunctionReport r{left.size(), right.size(), left.size() == right.size()};
  std::sort(right.begin(), right.end());
  for (const auto& m : left) {
    PointMap beta = adjunction_transpose_fwd(m);
    if (!std::binary_search(right.begin(), right.end(), beta)) r.bijection = false;
    else if (!(adjunction_transpose_bwd(beta, z, rho) == m)) r.bijection = false;
  }
  Representation down = r_down(z);
  for (const auto& beta : right) {
    try {
      RepMorphism m = adjunction_transpose_bwd(beta, z, rho);
      if (!rep_morphism_check(m, down, rho) || adjunction_transpose_fwd(m) != beta) r.bijection = false;
    } catch (const DomainError&) {
      r.bijection = false;
    }
  }
  return r;
}

bool naturality_in_foliation(const PointMap& phi, const Foliation& zp, const Foliation& z, const Representation& rho) {
  check_adjunction_pre(z, rho);
  check_adjunction_pre(zp, rho);
  RepMorphism lifted = r_down_on_morphism(phi, zp, z);
  for (const auto& m : hom_down(z, rho)) {
    RepMorphism expected = compose(m, lifted);
    PointMap beta = compose_maps(m.beta, phi);
    if (!(adjunction_transpose_bwd(beta, zp, rho) == expected)) return false;
    if (adjunction_transpose_fwd(expected) != beta) return false;
  }
  return true;
}

bool naturality_in_representation(const RepMorphism& m, const Foliation& z, const Representation& rho,
                                  const Representation& rhop) {
  check_adjunction_pre(z, rho);
  check_adjunction_pre(z, rhop);
  if (!rep_morphism_check(m, rho, rhop)) throw DomainError("naturality: not a representation morphism");
  for (const auto& beta : hom_phi(z, rho)) {
    RepMorphism expected = compose(m, adjunction_transpose_bwd(beta, z, rho));
    if (!(adjunction_transpose_bwd(compose_maps(m.beta, beta), z, rhop) == expected)) return false;
  }
  return true;
}

LeafFormIso leaf_form_iso(const Representation& rho) {
  if (!rep_validate(rho)) throw DomainError("leaf form: representation is not valid");
  if (!is_distinct(rho) || !is_clear(rho)) throw DomainError("leaf form: representation must be clear and distinct");
  Representation form = r_down(phi(rho, StructureSelector::Grossier, StructureSelector::Grossier));
  const int p = rho.object().size();
  LeafFormIso out{form, {PointMap(p), {}}, {PointMap(p), {}}};
  for (int a = 0; a < p; ++a) {
    auto it = std::find(form.map().begin(), form.map().end(), rho(a));
    if (it == form.map().end()) throw std::logic_error("leaf form: an image is not a leaf");
    int leaf = static_cast<int>(it - form.map().begin());
    out.forward.alpha[a] = leaf;
    out.backward.alpha[leaf] = a;
  }
  for (int i = 0; i < rho.ambient().size(); ++i) {
    out.forward.beta.push_back(i);
    out.backward.beta.push_back(i);
  }
  return out;
}

}  // namespace connective
