#include "connective/order.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace connective {

bool is_irreducible(const Space& sp, Subset k) {
  if (!sp.is_connected(k)) throw DomainError("is_irreducible: part is not connected");
  if (k == 0) return false;

  // Parts strictly inside k; k is generated by them iff their intersecting
  // clusters glue up to all of k.
  std::vector<Subset> parts;
  for (Subset s : sp.connected())
    if (s != 0 && s != k && is_subset(s, k)) parts.push_back(s);

  std::vector<std::size_t> parent(parts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (meets(parts[i], parts[j])) parent[find(i)] = find(j);

  std::vector<Subset> cluster(parts.size(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) cluster[find(i)] |= parts[i];
  return std::find(cluster.begin(), cluster.end(), k) == cluster.end();
}

IrrPoset irreducibles(const Space& sp) {
  std::vector<Subset> xs;
  for (Subset k : sp.connected())
    if (k != 0 && is_irreducible(sp, k)) xs.push_back(k);
  return {Family(std::move(xs))};
}

std::size_t longest_chain(const IrrPoset& p) {
  std::vector<Subset> xs = p.elements.items();
  std::sort(xs.begin(), xs.end(), [](Subset a, Subset b) { return cardinality(a) < cardinality(b); });
  std::vector<std::size_t> depth(xs.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (xs[j] != xs[i] && is_subset(xs[j], xs[i])) depth[i] = std::max(depth[i], depth[j] + 1);
    best = std::max(best, depth[i]);
  }
  return best;
}

FiniteOrdinal poset_height(const IrrPoset& p) { return {longest_chain(p) + 1}; }

FiniteOrdinal connectivity_order(const Space& sp) {
  std::size_t l = longest_chain(irreducibles(sp));
  return {l == 0 ? 0 : l - 1};
}

FiniteOrdinal connectivity_order_predecessor(const Space& sp) { return {longest_chain(irreducibles(sp))}; }

}  // namespace connective
