#include "connective/category.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <tuple>

namespace connective {

namespace {

std::vector<std::vector<int>> empty_table(const std::vector<Arrow>& arrows) {
  std::size_t n = arrows.size();
  return std::vector<std::vector<int>>(n, std::vector<int>(n, -1));
}

}  // namespace

FinCat::FinCat(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> identities,
               std::vector<std::vector<int>> comp)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), identities_(std::move(identities)), comp_(std::move(comp)) {
  const int no = object_count(), na = arrow_count();
  if (static_cast<int>(identities_.size()) != no) throw InputError("one identity per object required");
  for (const auto& a : arrows_)
    if (a.dom < 0 || a.dom >= no || a.cod < 0 || a.cod >= no) throw InputError("arrow endpoint out of range: " + a.id);
  for (int i : identities_)
    if (i < 0 || i >= na) throw InputError("identity arrow out of range");
  if (static_cast<int>(comp_.size()) != na) throw InputError("composition table has wrong size");
  for (int g = 0; g < na; ++g) {
    if (static_cast<int>(comp_[g].size()) != na) throw InputError("composition table has wrong size");
    for (int f = 0; f < na; ++f) {
      int h = comp_[g][f];
      if (composable(g, f) != (h >= 0)) throw InputError("composition table defined off composable pairs or missing a composite");
      if (h >= na) throw InputError("composite out of range");
    }
  }
  std::set<std::string> ids;
  for (const auto& a : arrows_)
    if (!ids.insert(a.id).second) throw InputError("duplicate arrow id: " + a.id);
  std::set<std::string> names(objects_.begin(), objects_.end());
  if (names.size() != objects_.size()) throw InputError("duplicate object name");
}

int FinCat::compose(int g, int f) const {
  int h = comp_[g][f];
  if (h < 0) throw DomainError("arrows " + arrows_[g].id + " and " + arrows_[f].id + " are not composable");
  return h;
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < arrow_count(); ++f)
    if (dom(f) == a && cod(f) == b) out.push_back(f);
  return out;
}

int FinCat::find_object(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  return it == objects_.end() ? -1 : static_cast<int>(it - objects_.begin());
}

int FinCat::find_arrow(const std::string& id) const {
  for (int f = 0; f < arrow_count(); ++f)
    if (arrows_[f].id == id) return f;
  return -1;
}

bool cat_validate(const FinCat& c) {
  const int na = c.arrow_count();
  for (int o = 0; o < c.object_count(); ++o) {
    int i = c.identity(o);
    if (c.dom(i) != o || c.cod(i) != o) return false;
  }
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      if (!c.composable(g, f)) continue;
      int h = c.table()[g][f];
      if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g)) return false;
    }
  for (int f = 0; f < na; ++f) {
    if (c.table()[f][c.identity(c.dom(f))] != f) return false;
    if (c.table()[c.identity(c.cod(f))][f] != f) return false;
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      if (!c.composable(g, f)) continue;
      int gf = c.table()[g][f];
      for (int h = 0; h < na; ++h) {
        if (!c.composable(h, g)) continue;
        if (c.table()[h][gf] != c.table()[c.table()[h][g]][f]) return false;
      }
    }
  return true;
}

FinCat make_category(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> identities,
                     const std::vector<Composite>& composites) {
  const int na = static_cast<int>(arrows.size());
  auto comp = empty_table(arrows);
  if (identities.size() != objects.size()) throw InputError("one identity per object required");
  for (int f = 0; f < na; ++f) {
    const Arrow& a = arrows[f];
    if (a.dom < 0 || a.cod < 0 || a.dom >= static_cast<int>(objects.size()) || a.cod >= static_cast<int>(objects.size()))
      throw InputError("arrow endpoint out of range: " + a.id);
    comp[f][identities[a.dom]] = f;
    comp[identities[a.cod]][f] = f;
  }
  for (const auto& c : composites) {
    if (c.f < 0 || c.g < 0 || c.h < 0 || c.f >= na || c.g >= na || c.h >= na) throw InputError("composite refers to unknown arrow");
    if (arrows[c.f].cod != arrows[c.g].dom) throw InputError("composite listed for a non-composable pair");
    int& slot = comp[c.g][c.f];
    if (slot >= 0 && slot != c.h) throw InputError("conflicting composites for " + arrows[c.g].id + "∘" + arrows[c.f].id);
    slot = c.h;
  }
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (arrows[f].cod == arrows[g].dom && comp[g][f] < 0)
        throw InputError("missing composite " + arrows[g].id + "∘" + arrows[f].id);
  return FinCat(std::move(objects), std::move(arrows), std::move(identities), std::move(comp));
}

FinCat monoid_category(const std::vector<std::vector<int>>& table, int unit, std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (static_cast<int>(names.size()) != n) throw InputError("monoid: one name per element required");
  if (unit < 0 || unit >= n) throw InputError("monoid: unit out of range");
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({names[i], 0, 0});
  std::vector<std::vector<int>> comp(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != n) throw InputError("monoid: table is not square");
    for (int f = 0; f < n; ++f) {
      int v = table[f][g];
      if (v < 0 || v >= n) throw InputError("monoid: product out of range");
      comp[g][f] = v;
    }
  }
  return FinCat({"*"}, std::move(arrows), {unit}, std::move(comp));
}

FinCat preorder_category(std::vector<std::string> objects, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(objects.size());
  if (static_cast<int>(leq.size()) != n) throw InputError("preorder: relation has wrong size");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(leq[r].size()) != n) throw InputError("preorder: relation has wrong size");
    if (!leq[r][r]) throw InputError("preorder: relation is not reflexive");
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (leq[r][s] && leq[s][t] && !leq[r][t]) throw InputError("preorder: relation is not transitive");
  }
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  std::vector<int> ids(n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (leq[r][s]) {
        index[r][s] = static_cast<int>(arrows.size());
        if (r == s) ids[r] = index[r][s];
        arrows.push_back({r == s ? "id_" + objects[r] : objects[r] + "->" + objects[s], r, s});
      }
  auto comp = empty_table(arrows);
  for (int f = 0; f < static_cast<int>(arrows.size()); ++f)
    for (int g = 0; g < static_cast<int>(arrows.size()); ++g)
      if (arrows[f].cod == arrows[g].dom) comp[g][f] = index[arrows[f].dom][arrows[g].cod];
  return FinCat(std::move(objects), std::move(arrows), std::move(ids), std::move(comp));
}

FinCat chain_category(int length) {
  if (length < 0) throw InputError("chain length must be nonnegative");
  const int n = length + 1;
  std::vector<std::string> objects;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int r = 0; r < n; ++r) {
    objects.push_back(std::to_string(r));
    for (int s = r; s < n; ++s) leq[r][s] = true;
  }
  return preorder_category(std::move(objects), leq);
}

FinCat arrow_category() {
  return make_category({"S", "T"}, {{"id_S", 0, 0}, {"id_T", 1, 1}, {"f", 0, 1}}, {0, 1}, {});
}

FinCat discrete_category(int n) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    objects.push_back(std::to_string(i));
    arrows.push_back({"id_" + std::to_string(i), i, i});
    ids.push_back(i);
  }
  return make_category(std::move(objects), std::move(arrows), std::move(ids), {});
}

FinCat cyclic_group(int order) {
  if (order < 1) throw InputError("group order must be positive");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names;
  for (int a = 0; a < order; ++a) {
    names.push_back("r" + std::to_string(a));
    for (int b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  }
  return monoid_category(table, 0, std::move(names));
}

FinCat symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  std::vector<std::string> names;
  for (int a = 0; a < 6; ++a) {
    names.push_back("p" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> q{};
      for (int i = 0; i < 3; ++i) q[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(q);
    }
  }
  return monoid_category(table, 0, std::move(names));
}

bool functor_check(const Functor& f, const FinCat& src, const FinCat& dst) {
  if (static_cast<int>(f.objects.size()) != src.object_count() || static_cast<int>(f.arrows.size()) != src.arrow_count())
    return false;
  for (int o : f.objects)
    if (o < 0 || o >= dst.object_count()) return false;
  for (int a : f.arrows)
    if (a < 0 || a >= dst.arrow_count()) return false;
  for (int a = 0; a < src.arrow_count(); ++a)
    if (dst.dom(f.arrows[a]) != f.objects[src.dom(a)] || dst.cod(f.arrows[a]) != f.objects[src.cod(a)]) return false;
  for (int o = 0; o < src.object_count(); ++o)
    if (f.arrows[src.identity(o)] != dst.identity(f.objects[o])) return false;
  for (int g = 0; g < src.arrow_count(); ++g)
    for (int a = 0; a < src.arrow_count(); ++a)
      if (src.composable(g, a) && f.arrows[src.compose(g, a)] != dst.compose(f.arrows[g], f.arrows[a])) return false;
  return true;
}

Functor compose(const Functor& second, const Functor& first) {
  Functor out;
  for (int o : first.objects) out.objects.push_back(second.objects[o]);
  for (int a : first.arrows) out.arrows.push_back(second.arrows[a]);
  return out;
}

Functor identity_functor(const FinCat& c) {
  Functor f{std::vector<int>(c.object_count()), std::vector<int>(c.arrow_count())};
  std::iota(f.objects.begin(), f.objects.end(), 0);
  std::iota(f.arrows.begin(), f.arrows.end(), 0);
  return f;
}

bool is_faithful(const Functor& f, const FinCat& src) {
  std::set<std::tuple<int, int, int>> seen;
  for (int a = 0; a < src.arrow_count(); ++a)
    if (!seen.emplace(src.dom(a), src.cod(a), f.arrows[a]).second) return false;
  return true;
}

bool is_isomorphism(const Functor& f, const FinCat& src, const FinCat& dst) {
  if (!functor_check(f, src, dst)) return false;
  if (src.object_count() != dst.object_count() || src.arrow_count() != dst.arrow_count()) return false;
  std::set<int> objs(f.objects.begin(), f.objects.end());
  std::set<int> arrows(f.arrows.begin(), f.arrows.end());
  return objs.size() == f.objects.size() && arrows.size() == f.arrows.size();
}

Functor inverse(const Functor& f, const FinCat& src, const FinCat& dst) {
  if (!is_isomorphism(f, src, dst)) throw DomainError("functor is not an isomorphism");
  Functor g{std::vector<int>(dst.object_count()), std::vector<int>(dst.arrow_count())};
  for (int o = 0; o < src.object_count(); ++o) g.objects[f.objects[o]] = o;
  for (int a = 0; a < src.arrow_count(); ++a) g.arrows[f.arrows[a]] = a;
  return g;
}

std::vector<Functor> enumerate_functors(const FinCat& src, const FinCat& dst, std::size_t limit) {
  std::vector<Functor> out;
  const int no = src.object_count(), na = src.arrow_count();
  Functor cur{std::vector<int>(no, 0), std::vector<int>(na, -1)};

  // Each composite triple is checked once, when its last arrow gets assigned.
  std::vector<std::vector<std::array<int, 3>>> triples(na);
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (src.composable(g, f)) {
        int h = src.compose(g, f);
        triples[std::max({g, f, h})].push_back({g, f, h});
      }
  auto consistent = [&](int a) {
    for (auto [g, f, h] : triples[a])
      if (cur.arrows[h] != dst.compose(cur.arrows[g], cur.arrows[f])) return false;
    return true;
  };
  std::vector<std::vector<int>> options(na);
  auto assign_arrows = [&](auto&& self, int a) -> void {
    if (a == na) {
      if (out.size() >= limit) throw CapacityError("functor enumeration limit reached");
      out.push_back(cur);
      return;
    }
    for (int t : options[a]) {
      cur.arrows[a] = t;
      if (consistent(a)) self(self, a + 1);
    }
    cur.arrows[a] = -1;
  };
  auto assign_objects = [&](auto&& self, int o) -> void {
    if (o == no) {
      for (int a = 0; a < na; ++a) {
        if (src.is_identity(a)) options[a] = {dst.identity(cur.objects[src.dom(a)])};
        else options[a] = dst.hom(cur.objects[src.dom(a)], cur.objects[src.cod(a)]);
      }
      assign_arrows(assign_arrows, 0);
      return;
    }
    for (int t = 0; t < dst.object_count(); ++t) {
      cur.objects[o] = t;
      self(self, o + 1);
    }
  };
  assign_objects(assign_objects, 0);
  return out;
}

bool is_monic(const FinCat& c, int f) {
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int h = g + 1; h < c.arrow_count(); ++h)
      if (c.composable(f, g) && c.composable(f, h) && c.dom(g) == c.dom(h) && c.compose(f, g) == c.compose(f, h))
        return false;
  return true;
}

bool is_epic(const FinCat& c, int f) {
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int h = g + 1; h < c.arrow_count(); ++h)
      if (c.composable(g, f) && c.composable(h, f) && c.cod(g) == c.cod(h) && c.compose(g, f) == c.compose(h, f))
        return false;
  return true;
}

bool is_iso(const FinCat& c, int f) {
  for (int g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(g, f) == c.identity(c.dom(f)) && c.compose(f, g) == c.identity(c.cod(f))) return true;
  return false;
}

}  // namespace connective
