#include "connective/foliation.hpp"

#include <algorithm>

namespace connective {

Foliation::Foliation(Space internal, Space external) : internal_(std::move(internal)), external_(std::move(external)) {
  if (internal_.size() != external_.size()) throw InputError("foliation structures over different supports");
}

bool is_regular(const Foliation& z) {
  const auto& ext = z.external().connected();
  return std::all_of(z.internal().connected().begin(), z.internal().connected().end(),
                     [&](Subset k) { return ext.contains(k); });
}

std::vector<Subset> leaves(const Foliation& z) { return connected_components(z.internal()).components; }

int leaf_of(const std::vector<Subset>& ls, int p) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (has(ls[i], p)) return static_cast<int>(i);
  return -1;
}

Space leaf_space_induced(const Foliation& z) {
  auto ls = leaves(z);
  if (ls.size() > static_cast<std::size_t>(kMaxPoints)) throw CapacityError("too many leaves");
  Subset dom = 0;
  for (Subset l : ls) dom |= l;
  std::vector<Subset> xs;
  for (Subset k : z.external().connected()) {
    if (!is_subset(k, dom)) continue;
    Subset chosen = 0, covered = 0;
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (is_subset(ls[i], k)) {
        chosen |= singleton(static_cast<int>(i));
        covered |= ls[i];
      }
    if (covered == k) xs.push_back(chosen);
  }
  return trusted_space(static_cast<int>(ls.size()), Family(std::move(xs)));
}

Space leaf_space_quotient(const Foliation& z) { return quotient_partial(z.external(), pe_of_structure(z.internal())); }

bool foliation_morphism_check(const PointMap& phi, const Foliation& z, const Foliation& zp, bool strict) {
  if (!morphism_check(phi, z.internal(), zp.internal())) return false;
  if (!morphism_check(phi, z.external(), zp.external())) return false;
  if (!strict) return true;
  auto target = leaves(zp);
  for (Subset l : leaves(z))
    if (std::find(target.begin(), target.end(), image(phi, l)) == target.end()) return false;
  return true;
}

}  // namespace connective
