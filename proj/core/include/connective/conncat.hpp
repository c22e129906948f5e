#pragma once

#include <optional>
#include <vector>

#include "connective/category.hpp"
#include "connective/order.hpp"
#include "connective/space.hpp"

namespace connective {

// Arrow sets are bitmasks over arrow indices, so at most 63 arrows.
struct ConnCat {
  FinCat category;
  Family arrow_connected;
};

// {b∘a : a ∈ a_set, b ∈ b_set, composable}.
Subset arrowset_compose(const FinCat& c, Subset a_set, Subset b_set);

bool conncat_validate(const FinCat& c, const Family& fam);
inline bool conncat_validate(const ConnCat& cc) { return conncat_validate(cc.category, cc.arrow_connected); }

// Least structure closed under intersecting unions and arrow-set composition.
Family conncat_generate(const FinCat& c, const Family& fam, bool integral);

FiniteOrdinal brunnian_order(const FinCat& c);

struct Monoid {
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int unit = 0;
  int size() const { return static_cast<int>(table.size()); }
};

bool monoid_validate(const Monoid& m);
Subset monoid_product(const Monoid& m, Subset a, Subset b);

struct MonoidFlags {
  bool connective = false;
  std::optional<bool> via_translations;  // only for integral structures
};

MonoidFlags monoid_connective_check(const Monoid& m, const Family& fam);
// Cancellative law on both sides.
bool is_regular_law(const Monoid& m);
// Group whose inversion keeps connected parts connected.
bool inversion_preserves(const Monoid& m, const Family& fam);

// Objects linked by an arrow become connected pairs; generated without
// extra singletons (identities already supply them).
Space object_connectivity(const FinCat& c);

}  // namespace connective
