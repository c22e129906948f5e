#pragma once

#include <utility>
#include <vector>

#include "connective/category.hpp"
#include "connective/conndyn.hpp"
#include "connective/dynamics.hpp"
#include "connective/representation.hpp"
#include "connective/space.hpp"

// Brute-force reference implementations. They deliberately avoid the library
// algorithms and work from the definitions directly.
namespace oracle {

using connective::Family;
using connective::FinCat;
using connective::Space;
using connective::Subset;

// Every union of members sharing a common point (any number of them).
std::vector<Subset> intersecting_unions(int n, const std::vector<Subset>& members);

// ∅ present and closed under unions of every subfamily with a common point.
bool def1_valid(int n, const Family& fam);

// Least valid structure containing fam, by iterating full subfamily unions.
Family closure(int n, const Family& fam, bool integral);

// Exhaustive minimality: intersection of all valid structures over n points
// that contain fam (n <= 3 only).
Family closure_by_intersection(int n, const Family& fam, bool integral);

// Connected subsets of a graph, via breadth-first search inside each subset.
bool graph_connected(int n, const std::vector<std::pair<int, int>>& edges, Subset s);
Family graph_family(int n, const std::vector<std::pair<int, int>>& edges);

// Inclusion-maximal nonempty connected parts.
std::vector<Subset> maximal_parts(const Space& sp);

// K is irreducible iff it is not a union of two intersecting connected proper parts.
bool irreducible_by_pairs(const Space& sp, Subset k);
// K is irreducible iff K is outside the structure generated by the others.
bool irreducible_by_generation(const Space& sp, Subset k);
std::vector<Subset> irreducibles(const Space& sp);
// Longest strict inclusion chain, by memoized recursion.
std::size_t longest_chain(const std::vector<Subset>& parts);

// Images of connected parts under a map (no closure).
Family direct_images(const connective::PointMap& f, const Family& fam);
// Class index of every point in a partition listed by least member.
connective::PointMap projection(int n, const std::vector<Subset>& classes);
// Parts A whose image is in the closure of the images of the connected parts.
Family structural_quotient(const Space& sp, const std::vector<Subset>& classes);

// Pairs (A, B) of disjoint nonempty parts such that no connected part of
// A ∪ B meets both; each unordered pair once with A holding the least point.
std::vector<std::pair<Subset, Subset>> canonical_pairs(const Space& sp);

// Unions over images, evaluated pointwise.
std::vector<Subset> kleisli(const std::vector<Subset>& second, const std::vector<Subset>& first);

// Category axioms by scanning every triple.
bool category_axioms(const FinCat& c);
// Functor laws of a dynamics, with transitions composed by hand.
bool functor_laws(const connective::Dynamics& a);

// Leaves of a connective dynamics: maximal parts of the closure of every
// reach set of every connected arrow set.
std::vector<Subset> dyn_leaves(const connective::ConnDynamics& cd);
// Order of the space on leaves where a set of leaves is connected iff its
// union is a connected set of states.
std::size_t dyn_order(const connective::ConnDynamics& cd);

}  // namespace oracle
