#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "connective/category.hpp"
#include "connective/subset.hpp"

namespace connective {

// Set-valued map between two finite state lists, by local position.
// rel[i] is the set of target positions reached from source position i.
class Transition {
 public:
  Transition() = default;
  Transition(int source_size, int target_size, std::vector<Subset> rel);

  static Transition identity(int n);
  static Transition empty(int source_size, int target_size);

  int source_size() const { return static_cast<int>(rel_.size()); }
  int target_size() const { return target_size_; }
  Subset operator()(int i) const { return rel_[i]; }
  Subset image(Subset s) const;
  const std::vector<Subset>& rel() const { return rel_; }

  friend bool operator==(const Transition&, const Transition&) = default;

 private:
  int target_size_ = 0;
  std::vector<Subset> rel_;
};

// (g . f)(a) is the union of g over f(a).
Transition compose(const Transition& g, const Transition& f);
// Pointwise inclusion small(a) ⊆ big(a).
bool included(const Transition& small, const Transition& big);
// b ∈ converse(t)(a) iff a ∈ t(b).
Transition converse(const Transition& t);

struct TransitionFlags {
  bool quasi_deterministic = false;  // at most one image
  bool complete = false;             // at least one image
  bool deterministic = false;        // exactly one image
  bool reversible = false;           // deterministic and bijective
};

TransitionFlags transition_classify(const Transition& t);

// A category, a global state universe, per-object state lists (global
// indices) and one transition per arrow between the lists of its ends.
class Dynamics {
 public:
  Dynamics() = default;
  Dynamics(FinCat cat, std::vector<std::string> state_names, std::vector<std::vector<int>> states,
           std::vector<Transition> trans);

  const FinCat& category() const { return cat_; }
  const std::vector<std::string>& state_names() const { return names_; }
  int state_count() const { return static_cast<int>(names_.size()); }
  const std::vector<int>& states(int obj) const { return states_[obj]; }
  const Transition& trans(int arrow) const { return trans_[arrow]; }
  const std::vector<Transition>& transitions() const { return trans_; }
  // Position of global state s in the list of obj, -1 if absent.
  int local(int obj, int s) const;
  int find_state(const std::string& name) const;

  friend bool operator==(const Dynamics&, const Dynamics&) = default;

 private:
  FinCat cat_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> states_;
  std::vector<Transition> trans_;
};

bool dynamics_validate(const Dynamics& a);
bool is_proper(const Dynamics& a);
bool is_deterministic(const Dynamics& a);

// Pairs (a, b) of global states with b reachable from a by one arrow.
std::vector<std::pair<int, int>> state_preorder(const Dynamics& a);

std::vector<int> orbit(const Dynamics& a, int state);

Dynamics zeta(const FinCat& e);  // one state per object
Dynamics xi(const FinCat& e);    // states of T are the arrows into T

// A functor on the categories and, per object S of the source, a transition
// from the states of S to the states of the image object.
struct Dynamorphism {
  Functor functor;
  std::vector<Transition> delta;
  friend bool operator==(const Dynamorphism&, const Dynamorphism&) = default;
};

struct DynamorphismFlags {
  bool valid = false;
  bool complete = false;
  bool quasi_deterministic = false;
  bool deterministic = false;
  bool faithful = false;
};

DynamorphismFlags dynamorphism_check(const Dynamorphism& m, const Dynamics& a, const Dynamics& b);
bool is_dynamorphism(const Dynamorphism& m, const Dynamics& a, const Dynamics& b);

Dynamorphism compose(const Dynamorphism& second, const Dynamorphism& first);
Dynamorphism identity_dynamorphism(const Dynamics& a);

struct SolutionFlags {
  bool is_solution = false;
  bool complete = false;
};

// tau plays the role of time: it must be deterministic and proper.
SolutionFlags solution_check(const Dynamorphism& sigma, const Dynamics& tau, const Dynamics& a);

// From xi(e) to zeta(e): every arrow into S is sent to the single state S.
Dynamorphism canonical_Z(const FinCat& e);
Dynamorphism zeta_on_functor(const Functor& d, const FinCat& e, const FinCat& f);
Dynamorphism xi_on_functor(const Functor& d, const FinCat& e, const FinCat& f);

struct TcTriple {
  int source;  // global state
  int arrow;
  int target;  // global state
  friend auto operator<=>(const TcTriple&, const TcTriple&) = default;
};

// Transition category: objects are global states, arrows the triples (a, f, b)
// with b ∈ f(a). Requires a proper dynamics.
struct TransitionCategory {
  FinCat cat;
  std::vector<TcTriple> triples;  // arrow index -> triple
  std::map<TcTriple, int> index;
  int arrow_of(const TcTriple& t) const;
};

TransitionCategory transition_category(const Dynamics& a);
inline FinCat tc(const Dynamics& a) { return transition_category(a).cat; }
Functor tc_on_morphism(const Dynamorphism& m, const Dynamics& a, const Dynamics& b);
// The comparison e -> tc(zeta(e)), f -> (dom f, f, cod f).
Functor tc_zeta_witness(const FinCat& e);

Dynamics essentialize(const Dynamics& a);
// From essentialize(a) to a: each transition-category state is sent to itself.
Dynamorphism av(const Dynamics& a);
FinCat verticalize(const FinCat& e);

}  // namespace connective
