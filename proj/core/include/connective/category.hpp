#pragma once

#include <string>
#include <vector>

#include "connective/errors.hpp"

namespace connective {

struct Arrow {
  std::string id;
  int dom = 0;
  int cod = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite category given by its composition table. comp[g][f] is the index of
// g∘f when cod f == dom g and -1 otherwise. The constructor only checks
// shapes and ranges; the category axioms are checked by cat_validate.
class FinCat {
 public:
  FinCat() = default;
  FinCat(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> identities,
         std::vector<std::vector<int>> comp);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int f) const { return arrows_[f]; }
  int dom(int f) const { return arrows_[f].dom; }
  int cod(int f) const { return arrows_[f].cod; }
  int identity(int obj) const { return identities_[obj]; }
  const std::vector<int>& identities() const { return identities_; }
  bool is_identity(int f) const { return identities_[dom(f)] == f; }
  bool composable(int g, int f) const { return cod(f) == dom(g); }
  // g∘f; throws DomainError when not composable.
  int compose(int g, int f) const;
  const std::vector<std::vector<int>>& table() const { return comp_; }

  std::vector<int> hom(int a, int b) const;
  int find_object(const std::string& name) const;
  int find_arrow(const std::string& id) const;

  friend bool operator==(const FinCat&, const FinCat&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> comp_;
};

bool cat_validate(const FinCat& c);

// Builds the table from explicit non-identity composites, filling in the
// identity ones. Missing composable pairs are an input error.
struct Composite {
  int f;
  int g;
  int h;  // g∘f
};
FinCat make_category(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> identities,
                     const std::vector<Composite>& composites);

// One-object category of a monoid, composing f∘g as g*f.
// table[a][b] = a*b; names label the elements.
FinCat monoid_category(const std::vector<std::vector<int>>& table, int unit, std::vector<std::string> names);

// Arrows are the pairs r <= s of a reflexive, transitive relation.
FinCat preorder_category(std::vector<std::string> objects, const std::vector<std::vector<bool>>& leq);

FinCat chain_category(int length);  // objects 0..length, arrows i -> j for i <= j
FinCat arrow_category();            // S -> T
FinCat discrete_category(int n);
FinCat cyclic_group(int order);
FinCat symmetric_group3();

struct Functor {
  std::vector<int> objects;
  std::vector<int> arrows;
  friend bool operator==(const Functor&, const Functor&) = default;
};

bool functor_check(const Functor& f, const FinCat& src, const FinCat& dst);
Functor compose(const Functor& second, const Functor& first);
Functor identity_functor(const FinCat& c);
// Injective on each hom-set of the source.
bool is_faithful(const Functor& f, const FinCat& src);
bool is_isomorphism(const Functor& f, const FinCat& src, const FinCat& dst);
Functor inverse(const Functor& f, const FinCat& src, const FinCat& dst);

// Every functor src -> dst, by backtracking. Throws CapacityError past limit.
std::vector<Functor> enumerate_functors(const FinCat& src, const FinCat& dst, std::size_t limit = 1000000);

// Cancellation predicates read off the table.
bool is_monic(const FinCat& c, int f);  // f∘g = f∘h implies g = h
bool is_epic(const FinCat& c, int f);   // g∘f = h∘f implies g = h
bool is_iso(const FinCat& c, int f);

}  // namespace connective
