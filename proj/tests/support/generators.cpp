#include "generators.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "connective/category.hpp"

namespace gen {

using namespace connective;

Subset Rng::subset(int n, double p) {
  Subset s = 0;
  for (int i = 0; i < n; ++i)
    if (chance(p)) s |= singleton(i);
  return s;
}

Subset Rng::nonempty_subset(int n, double p) {
  if (n == 0) return 0;
  Subset s = subset(n, p);
  return s ? s : singleton(uniform(0, n - 1));
}

Family random_family(Rng& rng, int n, int members) {
  std::vector<Subset> xs;
  if (rng.chance(0.75)) xs.push_back(0);
  for (int i = 0; i < members; ++i) xs.push_back(rng.subset(n, rng.chance(0.5) ? 0.3 : 0.6));
  return Family(xs);
}

Space random_space(Rng& rng, int n, bool integral) {
  Family seed = random_family(rng, n, rng.uniform(0, n + 1));
  return trusted_space(n, generate(n, seed, integral || rng.chance(0.3)));
}

std::vector<Subset> random_partition(Rng& rng, int n) {
  std::vector<Subset> classes;
  for (int i = 0; i < n; ++i) {
    std::size_t c = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(classes.size())));
    if (c == classes.size()) classes.push_back(0);
    classes[c] |= singleton(i);
  }
  return classes;
}

Space random_space_with_connected_classes(Rng& rng, int n, const std::vector<Subset>& classes) {
  Family seed = random_family(rng, n, rng.uniform(0, n));
  for (Subset c : classes) seed.insert(c);
  return trusted_space(n, generate(n, seed, rng.chance(0.3)));
}

PartialEquiv random_partial_equiv(Rng& rng, int n) {
  std::vector<Subset> classes;
  for (Subset c : random_partition(rng, n))
    if (rng.chance(0.75)) classes.push_back(c);
  return PartialEquiv(n, classes);
}

Foliation random_foliation(Rng& rng, int n, bool regular) {
  Space internal = random_space(rng, n);
  Space external = random_space(rng, n);
  if (regular) {
    std::vector<Subset> both(internal.connected().begin(), internal.connected().end());
    both.insert(both.end(), external.connected().begin(), external.connected().end());
    external = trusted_space(n, generate(n, Family(both), false));
  }
  return Foliation(internal, external);
}

PointMap random_map(Rng& rng, int n, int m) {
  PointMap f(static_cast<std::size_t>(n));
  for (int& x : f) x = rng.uniform(0, m - 1);
  return f;
}

std::vector<Space> all_spaces(int n) {
  std::vector<Space> out;
  const int subsets = 1 << n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (subsets - 1)); ++code) {
    std::vector<Subset> xs{0};
    for (int s = 1; s < subsets; ++s)
      if ((code >> (s - 1)) & 1U) xs.push_back(static_cast<Subset>(s));
    Family fam(xs);
    if (validate_structure(n, fam)) out.push_back(trusted_space(n, std::move(fam)));
  }
  return out;
}

Representation random_representation(Rng& rng, const Space& object, const Space& ambient) {
  std::vector<Subset> map;
  for (int a = 0; a < object.size(); ++a) map.push_back(rng.nonempty_subset(ambient.size(), 0.4));
  return Representation(object, ambient, map);
}

Representation random_clear_distinct(Rng& rng, int object_n, int max_image, int extra_points) {
  Space object = random_space(rng, object_n, true);
  std::vector<Subset> map;
  int next = 0;
  for (int a = 0; a < object_n; ++a) {
    int size = rng.uniform(1, max_image);
    Subset img = 0;
    for (int k = 0; k < size; ++k) img |= singleton(next++);
    map.push_back(img);
  }
  const int images_end = next;
  const int n = images_end + extra_points;
  std::vector<Subset> seed{0};
  for (Subset k : object.connected()) {
    Subset u = 0;
    for (int a : points_of(k)) u |= map[static_cast<std::size_t>(a)];
    seed.push_back(u);
  }
  // Extra connected parts that never merge images: inside one image, or
  // among the points outside every image.
  for (Subset img : map)
    if (rng.chance(0.5)) seed.push_back(img & rng.subset(n, 0.5));
  Subset outside = full_set(n) & ~full_set(images_end);
  if (outside && rng.chance(0.5)) seed.push_back(outside & rng.subset(n, 0.6));
  Space ambient = trusted_space(n, generate(n, Family(seed), rng.chance(0.5)));
  return Representation(object, ambient, map);
}

namespace {

struct RelArrow {
  int dom;
  int cod;
  std::vector<Subset> rel;
  auto key() const { return std::tie(dom, cod, rel); }
};

std::vector<Subset> compose_rel(const std::vector<Subset>& g, const std::vector<Subset>& f) {
  std::vector<Subset> out;
  for (Subset s : f) {
    Subset u = 0;
    for (int j : points_of(s)) u |= g[static_cast<std::size_t>(j)];
    out.push_back(u);
  }
  return out;
}

std::vector<Subset> random_rel(Rng& rng, int ns, int nt, bool function) {
  std::vector<Subset> rel;
  for (int i = 0; i < ns; ++i) {
    if (function) rel.push_back(nt ? singleton(rng.uniform(0, nt - 1)) : 0);
    else rel.push_back(rng.subset(nt, 0.35));
  }
  return rel;
}

}  // namespace

RelationalCategory random_relational(Rng& rng, int max_objects, int max_arrows, int max_states, bool functions_only) {
  while (true) {
    const int k = rng.uniform(1, max_objects);
    std::vector<int> sizes;
    for (int o = 0; o < k; ++o) sizes.push_back(rng.uniform(functions_only ? 1 : 0, max_states));
    std::vector<RelArrow> arrows;
    for (int o = 0; o < k; ++o) {
      std::vector<Subset> id;
      for (int i = 0; i < sizes[o]; ++i) id.push_back(singleton(i));
      arrows.push_back({o, o, id});
    }
    auto find = [&](const RelArrow& a) {
      for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].key() == a.key()) return static_cast<int>(i);
      return -1;
    };
    const int generators = rng.uniform(0, 3);
    for (int g = 0; g < generators; ++g) {
      int d = rng.uniform(0, k - 1), c = rng.uniform(0, k - 1);
      RelArrow a{d, c, random_rel(rng, sizes[d], sizes[c], functions_only)};
      if (find(a) < 0) arrows.push_back(a);
    }
    bool grew = true;
    while (grew && static_cast<int>(arrows.size()) <= max_arrows) {
      grew = false;
      for (std::size_t f = 0; f < arrows.size(); ++f)
        for (std::size_t g = 0; g < arrows.size(); ++g) {
          if (arrows[f].cod != arrows[g].dom) continue;
          RelArrow h{arrows[f].dom, arrows[g].cod, compose_rel(arrows[g].rel, arrows[f].rel)};
          if (find(h) < 0) {
            arrows.push_back(h);
            grew = true;
          }
        }
    }
    if (static_cast<int>(arrows.size()) > max_arrows) continue;

    std::vector<std::string> objects;
    for (int o = 0; o < k; ++o) objects.push_back("o" + std::to_string(o));
    std::vector<Arrow> cat_arrows;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      std::string id = static_cast<int>(i) < k ? "id" + std::to_string(i) : "a" + std::to_string(i);
      cat_arrows.push_back({id, arrows[i].dom, arrows[i].cod});
    }
    std::vector<int> ids;
    for (int o = 0; o < k; ++o) ids.push_back(o);
    std::vector<Composite> comps;
    for (std::size_t f = k; f < arrows.size(); ++f)
      for (std::size_t g = k; g < arrows.size(); ++g)
        if (arrows[f].cod == arrows[g].dom)
          comps.push_back({static_cast<int>(f), static_cast<int>(g),
                           find({arrows[f].dom, arrows[g].cod, compose_rel(arrows[g].rel, arrows[f].rel)})});
    FinCat cat = make_category(objects, cat_arrows, ids, comps);

    std::vector<std::string> names;
    std::vector<std::vector<int>> states(static_cast<std::size_t>(k));
    for (int o = 0; o < k; ++o)
      for (int i = 0; i < sizes[o]; ++i) {
        states[o].push_back(static_cast<int>(names.size()));
        names.push_back("o" + std::to_string(o) + "s" + std::to_string(i));
      }
    std::vector<Transition> trans;
    for (const auto& a : arrows) trans.emplace_back(sizes[a.dom], sizes[a.cod], a.rel);
    Dynamics dyn(cat, names, states, trans);
    return {std::move(cat), std::move(dyn)};
  }
}

Dynamics doubled(const Dynamics& a) {
  const FinCat& c = a.category();
  std::vector<std::string> names;
  std::vector<std::vector<int>> states(static_cast<std::size_t>(c.object_count()));
  for (int o = 0; o < c.object_count(); ++o) {
    for (int copy = 0; copy < 2; ++copy)
      for (int s : a.states(o)) {
        states[o].push_back(static_cast<int>(names.size()));
        names.push_back(a.state_names()[s] + (copy ? "'" : ""));
      }
  }
  std::vector<Transition> trans;
  for (int f = 0; f < c.arrow_count(); ++f) {
    const Transition& t = a.trans(f);
    const int ns = t.source_size(), nt = t.target_size();
    std::vector<Subset> rel;
    for (int copy = 0; copy < 2; ++copy)
      for (int i = 0; i < ns; ++i) rel.push_back(copy ? t(i) << nt : t(i));
    trans.emplace_back(2 * ns, 2 * nt, rel);
  }
  return Dynamics(c, names, states, trans);
}

}  // namespace gen
