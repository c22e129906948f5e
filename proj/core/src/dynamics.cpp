#include "connective/dynamics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace connective {

Transition::Transition(int source_size, int target_size, std::vector<Subset> rel)
    : target_size_(target_size), rel_(std::move(rel)) {
  if (source_size < 0 || target_size < 0) throw InputError("negative state count");
  if (target_size > kMaxPoints) throw CapacityError("more than 63 states in one state list");
  if (static_cast<int>(rel_.size()) != source_size) throw InputError("transition has wrong number of rows");
  for (Subset s : rel_)
    if (!is_subset(s, full_set(target_size))) throw InputError("transition target out of range");
}

Transition Transition::identity(int n) {
  std::vector<Subset> rel;
  for (int i = 0; i < n; ++i) rel.push_back(singleton(i));
  return Transition(n, n, std::move(rel));
}

Transition Transition::empty(int source_size, int target_size) {
  return Transition(source_size, target_size, std::vector<Subset>(source_size, 0));
}

Subset Transition::image(Subset s) const {
  Subset out = 0;
  for (int p : points_of(s)) out |= rel_[p];
  return out;
}

Transition compose(const Transition& g, const Transition& f) {
  if (f.target_size() != g.source_size()) throw InputError("transitions are not composable");
  std::vector<Subset> rel;
  for (Subset s : f.rel()) rel.push_back(g.image(s));
  return Transition(f.source_size(), g.target_size(), std::move(rel));
}

bool included(const Transition& small, const Transition& big) {
  if (small.source_size() != big.source_size() || small.target_size() != big.target_size())
    throw InputError("comparing transitions of different shapes");
  for (int i = 0; i < small.source_size(); ++i)
    if (!is_subset(small(i), big(i))) return false;
  return true;
}

Transition converse(const Transition& t) {
  std::vector<Subset> rel(t.target_size(), 0);
  for (int a = 0; a < t.source_size(); ++a)
    for (int b : points_of(t(a))) rel[b] |= singleton(a);
  return Transition(t.target_size(), t.source_size(), std::move(rel));
}

TransitionFlags transition_classify(const Transition& t) {
  TransitionFlags fl{true, true, true, false};
  Subset hit = 0;
  bool injective = true;
  for (Subset s : t.rel()) {
    int c = cardinality(s);
    if (c > 1) fl.quasi_deterministic = false;
    if (c == 0) fl.complete = false;
    if (meets(s, hit)) injective = false;
    hit |= s;
  }
  fl.deterministic = fl.quasi_deterministic && fl.complete;
  fl.reversible = fl.deterministic && injective && hit == full_set(t.target_size());
  return fl;
}

Dynamics::Dynamics(FinCat cat, std::vector<std::string> state_names, std::vector<std::vector<int>> states,
                   std::vector<Transition> trans)
    : cat_(std::move(cat)), names_(std::move(state_names)), states_(std::move(states)), trans_(std::move(trans)) {
  if (static_cast<int>(states_.size()) != cat_.object_count()) throw InputError("one state list per object required");
  if (static_cast<int>(trans_.size()) != cat_.arrow_count()) throw InputError("one transition per arrow required");
  std::set<std::string> unique_names(names_.begin(), names_.end());
  if (unique_names.size() != names_.size()) throw InputError("duplicate state name");
  std::vector<bool> used(names_.size(), false);
  for (const auto& list : states_) {
    if (list.size() > static_cast<std::size_t>(kMaxPoints)) throw CapacityError("more than 63 states on one object");
    std::set<int> seen;
    for (int s : list) {
      if (s < 0 || s >= state_count()) throw InputError("state index out of range");
      if (!seen.insert(s).second) throw InputError("state listed twice on one object: " + names_[s]);
      used[s] = true;
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) throw InputError("state belongs to no object");
  for (int f = 0; f < cat_.arrow_count(); ++f) {
    const auto& t = trans_[f];
    if (t.source_size() != static_cast<int>(states_[cat_.dom(f)].size()) ||
        t.target_size() != static_cast<int>(states_[cat_.cod(f)].size()))
      throw InputError("transition shape does not match the state lists of arrow " + cat_.arrow(f).id);
  }
}

int Dynamics::local(int obj, int s) const {
  const auto& list = states_[obj];
  auto it = std::find(list.begin(), list.end(), s);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

int Dynamics::find_state(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool dynamics_validate(const Dynamics& a) {
  const FinCat& c = a.category();
  for (int o = 0; o < c.object_count(); ++o)
    if (!(a.trans(c.identity(o)) == Transition::identity(static_cast<int>(a.states(o).size())))) return false;
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int f = 0; f < c.arrow_count(); ++f)
      if (c.composable(g, f) && !(a.trans(c.compose(g, f)) == compose(a.trans(g), a.trans(f)))) return false;
  return true;
}

bool is_proper(const Dynamics& a) {
  std::vector<int> owners(a.state_count(), 0);
  for (int o = 0; o < a.category().object_count(); ++o)
    for (int s : a.states(o))
      if (++owners[s] > 1) return false;
  return true;
}

bool is_deterministic(const Dynamics& a) {
  return std::all_of(a.transitions().begin(), a.transitions().end(),
                     [](const Transition& t) { return transition_classify(t).deterministic; });
}

namespace {

int owner(const Dynamics& a, int s) {
  for (int o = 0; o < a.category().object_count(); ++o)
    if (a.local(o, s) >= 0) return o;
  return -1;
}

}  // namespace

std::vector<std::pair<int, int>> state_preorder(const Dynamics& a) {
  if (!is_proper(a)) throw DomainError("state preorder requires a proper dynamics");
  if (!dynamics_validate(a)) throw DomainError("state preorder requires a valid dynamics");
  const FinCat& c = a.category();
  std::set<std::pair<int, int>> rel;
  for (int f = 0; f < c.arrow_count(); ++f) {
    const auto& src = a.states(c.dom(f));
    const auto& dst = a.states(c.cod(f));
    for (std::size_t i = 0; i < src.size(); ++i)
      for (int j : points_of(a.trans(f)(static_cast<int>(i)))) rel.insert({src[i], dst[j]});
  }
  for (int s = 0; s < a.state_count(); ++s)
    if (!rel.count({s, s})) throw std::logic_error("state preorder is not reflexive");
  for (auto [x, y] : rel)
    for (auto it = rel.lower_bound({y, 0}); it != rel.end() && it->first == y; ++it)
      if (!rel.count({x, it->second})) throw std::logic_error("state preorder is not transitive");
  return {rel.begin(), rel.end()};
}

std::vector<int> orbit(const Dynamics& a, int state) {
  if (state < 0 || state >= a.state_count()) throw InputError("unknown state");
  const FinCat& c = a.category();
  std::set<int> out;
  for (int f = 0; f < c.arrow_count(); ++f) {
    int i = a.local(c.dom(f), state);
    if (i < 0) continue;
    for (int j : points_of(a.trans(f)(i))) out.insert(a.states(c.cod(f))[j]);
  }
  return {out.begin(), out.end()};
}

Dynamics zeta(const FinCat& e) {
  std::vector<std::vector<int>> states;
  for (int o = 0; o < e.object_count(); ++o) states.push_back({o});
  std::vector<Transition> trans(e.arrow_count(), Transition::identity(1));
  return Dynamics(e, e.objects(), std::move(states), std::move(trans));
}

Dynamics xi(const FinCat& e) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> states(e.object_count());
  std::vector<int> position(e.arrow_count());
  for (int a = 0; a < e.arrow_count(); ++a) {
    names.push_back(e.arrow(a).id);
    position[a] = static_cast<int>(states[e.cod(a)].size());
    states[e.cod(a)].push_back(a);
  }
  std::vector<Transition> trans;
  for (int f = 0; f < e.arrow_count(); ++f) {
    std::vector<Subset> rel;
    for (int a : states[e.dom(f)]) rel.push_back(singleton(position[e.compose(f, a)]));
    trans.emplace_back(static_cast<int>(states[e.dom(f)].size()), static_cast<int>(states[e.cod(f)].size()), std::move(rel));
  }
  return Dynamics(e, std::move(names), std::move(states), std::move(trans));
}

DynamorphismFlags dynamorphism_check(const Dynamorphism& m, const Dynamics& a, const Dynamics& b) {
  const FinCat& e = a.category();
  DynamorphismFlags fl;
  fl.faithful = is_faithful(m.functor, e);
  if (static_cast<int>(m.delta.size()) != e.object_count()) throw InputError("one delta transition per source object required");
  fl.complete = fl.quasi_deterministic = true;
  for (const auto& t : m.delta) {
    auto c = transition_classify(t);
    fl.complete = fl.complete && c.complete;
    fl.quasi_deterministic = fl.quasi_deterministic && c.quasi_deterministic;
  }
  fl.deterministic = fl.complete && fl.quasi_deterministic;
  if (!functor_check(m.functor, e, b.category())) return fl;
  for (int s = 0; s < e.object_count(); ++s) {
    const auto& t = m.delta[s];
    if (t.source_size() != static_cast<int>(a.states(s).size()) ||
        t.target_size() != static_cast<int>(b.states(m.functor.objects[s]).size()))
      throw InputError("delta transition shape does not match the state lists of object " + e.objects()[s]);
  }
  fl.valid = true;
  for (int f = 0; f < e.arrow_count() && fl.valid; ++f) {
    Transition lhs = compose(m.delta[e.cod(f)], a.trans(f));
    Transition rhs = compose(b.trans(m.functor.arrows[f]), m.delta[e.dom(f)]);
    fl.valid = included(lhs, rhs);
  }
  return fl;
}

bool is_dynamorphism(const Dynamorphism& m, const Dynamics& a, const Dynamics& b) {
  return dynamorphism_check(m, a, b).valid;
}

Dynamorphism compose(const Dynamorphism& second, const Dynamorphism& first) {
  Dynamorphism out{compose(second.functor, first.functor), {}};
  for (std::size_t s = 0; s < first.delta.size(); ++s)
    out.delta.push_back(compose(second.delta[first.functor.objects[s]], first.delta[s]));
  return out;
}

Dynamorphism identity_dynamorphism(const Dynamics& a) {
  Dynamorphism out{identity_functor(a.category()), {}};
  for (int o = 0; o < a.category().object_count(); ++o)
    out.delta.push_back(Transition::identity(static_cast<int>(a.states(o).size())));
  return out;
}

SolutionFlags solution_check(const Dynamorphism& sigma, const Dynamics& tau, const Dynamics& a) {
  if (!is_proper(tau) || !is_deterministic(tau)) throw DomainError("solution: time dynamics must be deterministic and proper");
  auto fl = dynamorphism_check(sigma, tau, a);
  SolutionFlags out{fl.valid && fl.quasi_deterministic, fl.complete};
  if (fl.valid) {
    // Once a solution is empty it stays empty at every later instant.
    auto empty_at = [&](int s) {
      int o = owner(tau, s);
      return sigma.delta[o](tau.local(o, s)) == 0;
    };
    for (auto [x, y] : state_preorder(tau))
      if (empty_at(x) && !empty_at(y)) throw std::logic_error("solution is empty at an instant but not later");
  }
  return out;
}

Dynamorphism canonical_Z(const FinCat& e) {
  Dynamics ex = xi(e);
  Dynamorphism out{identity_functor(e), {}};
  for (int o = 0; o < e.object_count(); ++o) {
    int n = static_cast<int>(ex.states(o).size());
    out.delta.emplace_back(n, 1, std::vector<Subset>(n, singleton(0)));
  }
  return out;
}

Dynamorphism zeta_on_functor(const Functor& d, const FinCat& e, const FinCat& f) {
  if (!functor_check(d, e, f)) throw DomainError("not a functor");
  return {d, std::vector<Transition>(e.object_count(), Transition::identity(1))};
}

Dynamorphism xi_on_functor(const Functor& d, const FinCat& e, const FinCat& f) {
  if (!functor_check(d, e, f)) throw DomainError("not a functor");
  Dynamics xe = xi(e), xf = xi(f);
  Dynamorphism out{d, {}};
  for (int o = 0; o < e.object_count(); ++o) {
    std::vector<Subset> rel;
    for (int a : xe.states(o)) rel.push_back(singleton(xf.local(d.objects[o], d.arrows[a])));
    out.delta.emplace_back(static_cast<int>(rel.size()), static_cast<int>(xf.states(d.objects[o]).size()), std::move(rel));
  }
  return out;
}

int TransitionCategory::arrow_of(const TcTriple& t) const {
  auto it = index.find(t);
  return it == index.end() ? -1 : it->second;
}

TransitionCategory transition_category(const Dynamics& a) {
  if (!is_proper(a)) throw DomainError("transition category requires a proper dynamics");
  const FinCat& c = a.category();
  TransitionCategory out;
  std::vector<Arrow> arrows;
  for (int f = 0; f < c.arrow_count(); ++f) {
    const auto& src = a.states(c.dom(f));
    const auto& dst = a.states(c.cod(f));
    for (std::size_t i = 0; i < src.size(); ++i)
      for (int j : points_of(a.trans(f)(static_cast<int>(i)))) {
        TcTriple t{src[i], f, dst[j]};
        out.index[t] = static_cast<int>(out.triples.size());
        out.triples.push_back(t);
        arrows.push_back({"(" + a.state_names()[t.source] + "," + c.arrow(f).id + "," + a.state_names()[t.target] + ")",
                          t.source, t.target});
      }
  }
  std::vector<int> ids(a.state_count(), -1);
  for (int s = 0; s < a.state_count(); ++s) {
    int o = owner(a, s);
    ids[s] = out.arrow_of({s, c.identity(o), s});
    if (ids[s] < 0) throw DomainError("identity arrow does not fix state " + a.state_names()[s]);
  }
  const int na = static_cast<int>(arrows.size());
  std::vector<std::vector<int>> comp(na, std::vector<int>(na, -1));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) {
      const auto& first = out.triples[x];
      const auto& second = out.triples[y];
      if (first.target != second.source) continue;
      int h = out.arrow_of({first.source, c.compose(second.arrow, first.arrow), second.target});
      if (h < 0) throw DomainError("dynamics does not respect composition");
      comp[y][x] = h;
    }
  out.cat = FinCat(a.state_names(), std::move(arrows), std::move(ids), std::move(comp));
  return out;
}

Functor tc_on_morphism(const Dynamorphism& m, const Dynamics& a, const Dynamics& b) {
  auto fl = dynamorphism_check(m, a, b);
  if (!fl.valid || !fl.deterministic) throw DomainError("transition category functor needs a valid deterministic dynamorphism");
  auto ta = transition_category(a), tb = transition_category(b);
  const FinCat& e = a.category();
  Functor out{std::vector<int>(a.state_count()), {}};
  for (int o = 0; o < e.object_count(); ++o) {
    const auto& list = a.states(o);
    for (std::size_t i = 0; i < list.size(); ++i)
      out.objects[list[i]] = b.states(m.functor.objects[o])[least_point(m.delta[o](static_cast<int>(i)))];
  }
  for (const auto& t : ta.triples) {
    int h = tb.arrow_of({out.objects[t.source], m.functor.arrows[t.arrow], out.objects[t.target]});
    if (h < 0) throw std::logic_error("transition category image arrow missing");
    out.arrows.push_back(h);
  }
  return out;
}

Functor tc_zeta_witness(const FinCat& e) {
  auto t = transition_category(zeta(e));
  Functor out{std::vector<int>(e.object_count()), {}};
  for (int o = 0; o < e.object_count(); ++o) out.objects[o] = o;
  for (int f = 0; f < e.arrow_count(); ++f) out.arrows.push_back(t.arrow_of({e.dom(f), f, e.cod(f)}));
  return out;
}

Dynamics essentialize(const Dynamics& a) { return zeta(tc(a)); }

Dynamorphism av(const Dynamics& a) {
  auto t = transition_category(a);
  Dynamorphism out;
  for (int s = 0; s < a.state_count(); ++s) {
    int o = owner(a, s);
    out.functor.objects.push_back(o);
    int n = static_cast<int>(a.states(o).size());
    out.delta.emplace_back(1, n, std::vector<Subset>{singleton(a.local(o, s))});
  }
  for (const auto& tr : t.triples) out.functor.arrows.push_back(tr.arrow);
  return out;
}

FinCat verticalize(const FinCat& e) { return tc(xi(e)); }

}  // namespace connective
