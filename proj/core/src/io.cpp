#include "connective/io.hpp"

#include <fstream>
#include <map>
#include <set>

namespace connective::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const std::string& as_string(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

int points_field(const json& j) {
  int n = as_int(field(j, "points"), "points");
  check_points(n);
  return n;
}

bool flag(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) return false;
  if (!j.at(key).is_boolean()) throw InputError(std::string(key) + " must be a boolean");
  return j.at(key).get<bool>();
}

json load_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(p.string() + ": " + e.what());
  }
}

int object_index(const FinCat& c, const std::string& name) {
  int o = c.find_object(name);
  if (o < 0) throw InputError("unknown object: " + name);
  return o;
}

int arrow_index(const FinCat& c, const std::string& id) {
  int f = c.find_arrow(id);
  if (f < 0) throw InputError("unknown arrow: " + id);
  return f;
}

// Subset of a named state list, by position in that list.
Subset local_set(const Dynamics& a, int obj, const json& names) {
  Subset out = 0;
  for (const auto& v : as_array(names, "state list")) {
    int s = a.find_state(as_string(v, "state"));
    int i = s < 0 ? -1 : a.local(obj, s);
    if (i < 0) throw InputError("state " + v.get<std::string>() + " is not a state of " + a.category().objects()[obj]);
    out |= singleton(i);
  }
  return out;
}

json named_states(const Dynamics& a, int obj, Subset local) {
  json out = json::array();
  for (int i : points_of(local)) out.push_back(a.state_names()[a.states(obj)[i]]);
  return out;
}

}  // namespace

json subset_to_json(Subset s) { return points_of(s); }

Subset subset_from_json(const json& j, int n) {
  Subset s = 0;
  for (const auto& v : as_array(j, "subset")) {
    int p = as_int(v, "point index");
    if (p < 0 || p >= n) throw InputError("point index " + std::to_string(p) + " out of range for " + std::to_string(n) + " points");
    s |= singleton(p);
  }
  return s;
}

json family_to_json(const Family& fam) {
  json out = json::array();
  for (Subset s : fam.display_order())
    if (s != 0) out.push_back(subset_to_json(s));
  return out;
}

Family family_from_json(const json& j, int n) {
  std::vector<Subset> xs;
  for (const auto& v : as_array(j, "family")) xs.push_back(subset_from_json(v, n));
  return Family(std::move(xs));
}

RawSpace raw_space_from_json(const json& j) {
  RawSpace raw;
  raw.points = points_field(j);
  raw.connected = j.contains("connected") ? family_from_json(j.at("connected"), raw.points) : Family{};
  raw.connected.insert(kEmpty);
  if (flag(j, "integral"))
    for (int i = 0; i < raw.points; ++i) raw.connected.insert(singleton(i));
  return raw;
}

Space space_from_json(const json& j) {
  RawSpace raw = raw_space_from_json(j);
  return Space(raw.points, std::move(raw.connected));
}

json to_json(const Space& sp) { return {{"points", sp.size()}, {"connected", family_to_json(sp.connected())}}; }

Foliation foliation_from_json(const json& j) {
  int n = points_field(j);
  auto structure = [&](const char* key) {
    Family fam = family_from_json(field(j, key), n);
    fam.insert(kEmpty);
    return Space(n, std::move(fam));
  };
  return Foliation(structure("internal"), structure("external"));
}

json to_json(const Foliation& z) {
  return {{"points", z.size()},
          {"internal", family_to_json(z.internal().connected())},
          {"external", family_to_json(z.external().connected())}};
}

Representation representation_from_json(const json& j) {
  Space object = space_from_json(field(j, "object"));
  Space ambient = space_from_json(field(j, "ambient"));
  std::vector<Subset> map;
  for (const auto& v : as_array(field(j, "map"), "map")) map.push_back(subset_from_json(v, ambient.size()));
  return Representation(std::move(object), std::move(ambient), std::move(map));
}

json to_json(const Representation& rho) {
  json map = json::array();
  for (Subset s : rho.map()) map.push_back(subset_to_json(s));
  return {{"object", to_json(rho.object())}, {"ambient", to_json(rho.ambient())}, {"map", map}};
}

json to_json(const RepMorphism& m) { return {{"alpha", m.alpha}, {"beta", m.beta}}; }

RepMorphism rep_morphism_from_json(const json& j) {
  return {point_map_from_json(field(j, "alpha")), point_map_from_json(field(j, "beta"))};
}

PartialEquiv partial_equiv_from_json(const json& j) {
  int n = points_field(j);
  std::vector<Subset> classes;
  for (const auto& v : as_array(field(j, "classes"), "classes")) classes.push_back(subset_from_json(v, n));
  return PartialEquiv(n, std::move(classes));
}

json to_json(const PartialEquiv& pe) {
  json classes = json::array();
  for (Subset c : pe.classes()) classes.push_back(subset_to_json(c));
  return {{"points", pe.size()}, {"classes", classes}};
}

SeparationDevice device_from_json(const json& j) {
  int n = points_field(j);
  std::vector<SeparatingPair> pairs;
  for (const auto& v : as_array(field(j, "pairs"), "pairs")) {
    if (!v.is_array() || v.size() != 2) throw InputError("a separating pair is an array of two subsets");
    pairs.push_back({subset_from_json(v[0], n), subset_from_json(v[1], n)});
  }
  return SeparationDevice(n, std::move(pairs));
}

json to_json(const SeparationDevice& dev) {
  std::vector<SeparatingPair> ps = dev.pairs();
  std::sort(ps.begin(), ps.end(), [](const SeparatingPair& a, const SeparatingPair& b) {
    Subset ua = a.first | a.second, ub = b.first | b.second;
    if (ua != ub) return display_less(ua, ub);
    return display_less(a.first, b.first);
  });
  json pairs = json::array();
  for (const auto& p : ps) {
    Subset x = p.first, y = p.second;
    if (display_less(y, x)) std::swap(x, y);
    pairs.push_back({subset_to_json(x), subset_to_json(y)});
  }
  return {{"points", dev.size()}, {"pairs", pairs}};
}

PointMap point_map_from_json(const json& j) {
  const json& arr = j.is_object() ? field(j, "map") : j;
  PointMap f;
  for (const auto& v : as_array(arr, "point map")) f.push_back(as_int(v, "point map entry"));
  return f;
}

FinCat category_from_json(const json& j) {
  std::vector<std::string> objects;
  for (const auto& v : as_array(field(j, "objects"), "objects")) objects.push_back(as_string(v, "object name"));
  std::map<std::string, int> obj_index;
  for (std::size_t i = 0; i < objects.size(); ++i) obj_index[objects[i]] = static_cast<int>(i);
  auto obj = [&](const json& v) {
    auto it = obj_index.find(as_string(v, "object name"));
    if (it == obj_index.end()) throw InputError("unknown object: " + v.get<std::string>());
    return it->second;
  };

  std::vector<Arrow> arrows;
  std::map<std::string, int> arrow_idx;
  for (const auto& v : as_array(field(j, "arrows"), "arrows")) {
    Arrow a{as_string(field(v, "id"), "arrow id"), obj(field(v, "dom")), obj(field(v, "cod"))};
    if (!arrow_idx.emplace(a.id, static_cast<int>(arrows.size())).second) throw InputError("duplicate arrow id: " + a.id);
    arrows.push_back(a);
  }
  auto arr = [&](const json& v) {
    auto it = arrow_idx.find(as_string(v, "arrow id"));
    if (it == arrow_idx.end()) throw InputError("unknown arrow: " + v.get<std::string>());
    return it->second;
  };

  const json& ids = field(j, "identities");
  if (!ids.is_object()) throw InputError("identities must map objects to arrow ids");
  std::vector<int> identities(objects.size(), -1);
  for (auto it = ids.begin(); it != ids.end(); ++it) identities[obj(json(it.key()))] = arr(it.value());
  for (std::size_t o = 0; o < objects.size(); ++o)
    if (identities[o] < 0) throw InputError("no identity given for object " + objects[o]);

  std::vector<Composite> composites;
  if (j.contains("compose"))
    for (const auto& v : as_array(j.at("compose"), "compose")) {
      if (!v.is_array() || v.size() != 3) throw InputError("compose entries are [f, g, h] with g∘f = h");
      composites.push_back({arr(v[0]), arr(v[1]), arr(v[2])});
    }
  return make_category(std::move(objects), std::move(arrows), std::move(identities), composites);
}

json to_json(const FinCat& c) {
  json arrows = json::array();
  for (const auto& a : c.arrows()) arrows.push_back({{"id", a.id}, {"dom", c.objects()[a.dom]}, {"cod", c.objects()[a.cod]}});
  json ids = json::object();
  for (int o = 0; o < c.object_count(); ++o) ids[c.objects()[o]] = c.arrow(c.identity(o)).id;
  json compose = json::array();
  for (int f = 0; f < c.arrow_count(); ++f)
    for (int g = 0; g < c.arrow_count(); ++g)
      if (c.composable(g, f) && !c.is_identity(f) && !c.is_identity(g))
        compose.push_back({c.arrow(f).id, c.arrow(g).id, c.arrow(c.compose(g, f)).id});
  return {{"objects", c.objects()}, {"arrows", arrows}, {"identities", ids}, {"compose", compose}};
}

Dynamics dynamics_from_json(const json& j, const std::filesystem::path& base_dir) {
  const json& cj = field(j, "category");
  FinCat cat;
  if (cj.is_string()) {
    std::filesystem::path p = cj.get<std::string>();
    if (p.is_relative() && !base_dir.empty() && std::filesystem::exists(base_dir / p)) p = base_dir / p;
    cat = category_from_json(unwrap_report(load_file(p)));
  } else {
    cat = category_from_json(cj);
  }

  const json& sj = field(j, "states");
  if (!sj.is_object()) throw InputError("states must map objects to state lists");
  std::vector<std::vector<std::string>> lists(cat.object_count());
  for (auto it = sj.begin(); it != sj.end(); ++it) {
    int o = object_index(cat, it.key());
    for (const auto& v : as_array(it.value(), "state list")) lists[o].push_back(as_string(v, "state"));
  }

  std::vector<std::string> universe;
  std::map<std::string, int> index;
  if (j.contains("universe")) {
    for (const auto& v : as_array(j.at("universe"), "universe")) {
      if (!index.emplace(as_string(v, "state"), static_cast<int>(universe.size())).second)
        throw InputError("duplicate state in universe");
      universe.push_back(v.get<std::string>());
    }
  } else {
    for (const auto& list : lists)
      for (const auto& name : list)
        if (index.emplace(name, static_cast<int>(universe.size())).second) universe.push_back(name);
  }
  std::vector<std::vector<int>> states(cat.object_count());
  for (int o = 0; o < cat.object_count(); ++o)
    for (const auto& name : lists[o]) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError("state " + name + " missing from universe");
      states[o].push_back(it->second);
    }

  std::vector<Transition> trans;
  for (int f = 0; f < cat.arrow_count(); ++f) {
    int ns = static_cast<int>(states[cat.dom(f)].size()), nt = static_cast<int>(states[cat.cod(f)].size());
    if (nt > kMaxPoints) throw CapacityError("more than 63 states on one object");
    trans.push_back(cat.is_identity(f) ? Transition::identity(ns) : Transition::empty(ns, nt));
  }
  Dynamics shape(cat, universe, states, trans);

  if (j.contains("transitions")) {
    const json& tj = j.at("transitions");
    if (!tj.is_object()) throw InputError("transitions must map arrow ids to state maps");
    for (auto it = tj.begin(); it != tj.end(); ++it) {
      int f = arrow_index(cat, it.key());
      if (!it.value().is_object()) throw InputError("transition of " + it.key() + " must map states to state lists");
      std::vector<Subset> rel(states[cat.dom(f)].size(), 0);
      for (auto st = it.value().begin(); st != it.value().end(); ++st) {
        int s = shape.find_state(st.key());
        int i = s < 0 ? -1 : shape.local(cat.dom(f), s);
        if (i < 0) throw InputError("state " + st.key() + " is not in the domain of " + it.key());
        rel[i] = local_set(shape, cat.cod(f), st.value());
      }
      const int rows = static_cast<int>(rel.size());
      trans[f] = Transition(rows, static_cast<int>(states[cat.cod(f)].size()), std::move(rel));
    }
  }
  return Dynamics(std::move(cat), std::move(universe), std::move(states), std::move(trans));
}

json to_json(const Dynamics& a) {
  const FinCat& c = a.category();
  json states = json::object();
  for (int o = 0; o < c.object_count(); ++o) {
    json list = json::array();
    for (int s : a.states(o)) list.push_back(a.state_names()[s]);
    states[c.objects()[o]] = list;
  }
  json trans = json::object();
  for (int f = 0; f < c.arrow_count(); ++f) {
    json m = json::object();
    const auto& src = a.states(c.dom(f));
    for (std::size_t i = 0; i < src.size(); ++i) m[a.state_names()[src[i]]] = named_states(a, c.cod(f), a.trans(f)(static_cast<int>(i)));
    trans[c.arrow(f).id] = m;
  }
  return {{"category", to_json(c)}, {"universe", a.state_names()}, {"states", states}, {"transitions", trans}};
}

Functor functor_from_json(const json& j, const FinCat& src, const FinCat& dst) {
  Functor f{std::vector<int>(src.object_count(), -1), std::vector<int>(src.arrow_count(), -1)};
  const json& oj = field(j, "objects");
  if (!oj.is_object()) throw InputError("functor objects must map names to names");
  for (auto it = oj.begin(); it != oj.end(); ++it)
    f.objects[object_index(src, it.key())] = object_index(dst, as_string(it.value(), "object name"));
  if (j.contains("arrows")) {
    const json& aj = j.at("arrows");
    if (!aj.is_object()) throw InputError("functor arrows must map ids to ids");
    for (auto it = aj.begin(); it != aj.end(); ++it)
      f.arrows[arrow_index(src, it.key())] = arrow_index(dst, as_string(it.value(), "arrow id"));
  }
  for (int o = 0; o < src.object_count(); ++o)
    if (f.objects[o] < 0) throw InputError("functor does not map object " + src.objects()[o]);
  for (int a = 0; a < src.arrow_count(); ++a) {
    if (f.arrows[a] >= 0) continue;
    // Identities may be left implicit.
    if (src.is_identity(a)) f.arrows[a] = dst.identity(f.objects[src.dom(a)]);
    else throw InputError("functor does not map arrow " + src.arrow(a).id);
  }
  return f;
}

Dynamorphism dynamorphism_from_json(const json& j, const Dynamics& src, const Dynamics& dst) {
  const FinCat& e = src.category();
  Dynamorphism m;
  if (j.contains("functor")) {
    m.functor = functor_from_json(j.at("functor"), e, dst.category());
  } else {
    if (!(e == dst.category())) throw InputError("functor may be omitted only between dynamics over the same category");
    m.functor = identity_functor(e);
  }
  const json empty = json::object();
  const json& dj = j.contains("delta") ? j.at("delta") : empty;
  if (!dj.is_object()) throw InputError("delta must map objects to state maps");
  for (auto it = dj.begin(); it != dj.end(); ++it) object_index(e, it.key());
  for (int o = 0; o < e.object_count(); ++o) {
    int target = m.functor.objects[o];
    std::vector<Subset> rel(src.states(o).size(), 0);
    if (dj.contains(e.objects()[o])) {
      const json& sm = dj.at(e.objects()[o]);
      if (!sm.is_object()) throw InputError("delta of " + e.objects()[o] + " must map states to state lists");
      for (auto st = sm.begin(); st != sm.end(); ++st) {
        int s = src.find_state(st.key());
        int i = s < 0 ? -1 : src.local(o, s);
        if (i < 0) throw InputError("state " + st.key() + " is not a state of " + e.objects()[o]);
        rel[i] = local_set(dst, target, st.value());
      }
    }
    m.delta.emplace_back(static_cast<int>(rel.size()), static_cast<int>(dst.states(target).size()), std::move(rel));
  }
  return m;
}

json to_json(const Functor& f, const FinCat& src, const FinCat& dst) {
  json objects = json::object(), arrows = json::object();
  for (int o = 0; o < src.object_count(); ++o) objects[src.objects()[o]] = dst.objects()[f.objects[o]];
  for (int a = 0; a < src.arrow_count(); ++a) arrows[src.arrow(a).id] = dst.arrow(f.arrows[a]).id;
  return {{"objects", objects}, {"arrows", arrows}};
}

json to_json(const Dynamorphism& m, const Dynamics& src, const Dynamics& dst) {
  const FinCat& e = src.category();
  json delta = json::object();
  for (int o = 0; o < e.object_count(); ++o) {
    json sm = json::object();
    const auto& list = src.states(o);
    for (std::size_t i = 0; i < list.size(); ++i)
      sm[src.state_names()[list[i]]] = named_states(dst, m.functor.objects[o], m.delta[o](static_cast<int>(i)));
    delta[e.objects()[o]] = sm;
  }
  return {{"functor", to_json(m.functor, e, dst.category())}, {"delta", delta}};
}

namespace {

Family arrow_family(const json& j, const FinCat& c) {
  std::vector<Subset> xs{kEmpty};
  for (const auto& v : as_array(j, "arrow_connected")) {
    Subset s = 0;
    for (const auto& id : as_array(v, "arrow set")) s |= singleton(arrow_index(c, as_string(id, "arrow id")));
    xs.push_back(s);
  }
  return Family(std::move(xs));
}

json named_arrow_family(const Family& fam, const FinCat& c) {
  json out = json::array();
  for (Subset s : fam.display_order()) {
    if (s == 0) continue;
    json ids = json::array();
    for (int f : points_of(s)) ids.push_back(c.arrow(f).id);
    out.push_back(ids);
  }
  return out;
}

}  // namespace

ConnCat conncat_from_json(const json& j, const std::filesystem::path& base_dir) {
  FinCat c;
  if (j.contains("category")) {
    const json& cj = j.at("category");
    if (cj.is_string()) {
      std::filesystem::path p = cj.get<std::string>();
      if (p.is_relative() && !base_dir.empty() && std::filesystem::exists(base_dir / p)) p = base_dir / p;
      c = category_from_json(unwrap_report(load_file(p)));
    } else {
      c = category_from_json(cj);
    }
  } else {
    c = category_from_json(j);
  }
  if (c.arrow_count() > kMaxPoints) throw CapacityError("arrow sets limited to 63 arrows");
  Family fam = j.contains("arrow_connected") ? arrow_family(j.at("arrow_connected"), c) : Family{kEmpty};
  if (flag(j, "integral"))
    for (int f = 0; f < c.arrow_count(); ++f) fam.insert(singleton(f));
  return {std::move(c), std::move(fam)};
}

json to_json(const ConnCat& cc) {
  json out = to_json(cc.category);
  out["arrow_connected"] = named_arrow_family(cc.arrow_connected, cc.category);
  return out;
}

ConnDynamics conndyn_from_json(const json& j, const std::filesystem::path& base_dir) {
  Dynamics a = dynamics_from_json(j, base_dir);
  if (a.state_count() > kMaxPoints) throw CapacityError("connective dynamics limited to 63 states");
  if (a.category().arrow_count() > kMaxPoints) throw CapacityError("connective dynamics limited to 63 arrows");
  Family arrows = arrow_family(field(j, "arrow_connected"), a.category());
  std::vector<Subset> xs{kEmpty};
  for (const auto& v : as_array(field(j, "state_connected"), "state_connected")) {
    Subset s = 0;
    for (const auto& name : as_array(v, "state set")) {
      int st = a.find_state(as_string(name, "state"));
      if (st < 0) throw InputError("unknown state: " + name.get<std::string>());
      s |= singleton(st);
    }
    xs.push_back(s);
  }
  if (flag(j, "state_integral"))
    for (int s = 0; s < a.state_count(); ++s) xs.push_back(singleton(s));
  return {std::move(a), std::move(arrows), Family(std::move(xs))};
}

json to_json(const ConnDynamics& cd) {
  json out = to_json(cd.dynamics);
  out["arrow_connected"] = named_arrow_family(cd.arrow_connected, cd.dynamics.category());
  json states = json::array();
  for (Subset s : cd.state_connected.display_order()) {
    if (s == 0) continue;
    json names = json::array();
    for (int i : points_of(s)) names.push_back(cd.dynamics.state_names()[i]);
    states.push_back(names);
  }
  out["state_connected"] = states;
  return out;
}

MonoidInput monoid_from_json(const json& j) {
  MonoidInput in;
  for (const auto& row : as_array(field(j, "table"), "table")) {
    std::vector<int> r;
    for (const auto& v : as_array(row, "table row")) r.push_back(as_int(v, "product"));
    in.monoid.table.push_back(std::move(r));
  }
  in.monoid.unit = j.contains("unit") ? as_int(j.at("unit"), "unit") : 0;
  const int n = in.monoid.size();
  if (n > kMaxPoints) throw CapacityError("monoid with more than 63 elements");
  in.connected = j.contains("connected") ? family_from_json(j.at("connected"), n) : Family{};
  in.connected.insert(kEmpty);
  if (flag(j, "integral"))
    for (int i = 0; i < n; ++i) in.connected.insert(singleton(i));
  return in;
}

const json& unwrap_report(const json& j) {
  if (j.is_object() && j.contains("ok") && j.contains("result") && j.size() == 2) return j.at("result");
  return j;
}

}  // namespace connective::io
