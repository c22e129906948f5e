#pragma once

#include <compare>
#include <cstddef>

#include "connective/space.hpp"

namespace connective {

struct FiniteOrdinal {
  std::size_t value = 0;
  friend auto operator<=>(const FiniteOrdinal&, const FiniteOrdinal&) = default;
};

// Irreducible connected parts, ordered by inclusion.
struct IrrPoset {
  Family elements;
};

// Throws DomainError when k is not connected in sp.
bool is_irreducible(const Space& sp, Subset k);

IrrPoset irreducibles(const Space& sp);

// Number of elements in the longest strict inclusion chain.
std::size_t longest_chain(const IrrPoset& p);

FiniteOrdinal poset_height(const IrrPoset& p);

// max(0, L - 1) with L the longest chain of irreducibles.
FiniteOrdinal connectivity_order(const Space& sp);

// The predecessor-of-height reading, which equals L; reported for comparison.
FiniteOrdinal connectivity_order_predecessor(const Space& sp);

}  // namespace connective
