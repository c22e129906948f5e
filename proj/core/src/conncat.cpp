#include "connective/conncat.hpp"

#include <stdexcept>
#include <string>

namespace connective {

namespace {

void check_arrow_capacity(const FinCat& c) {
  if (c.arrow_count() > kMaxPoints)
    throw CapacityError("arrow sets limited to 63 arrows, got " + std::to_string(c.arrow_count()));
}

}  // namespace

Subset arrowset_compose(const FinCat& c, Subset a_set, Subset b_set) {
  check_arrow_capacity(c);
  Subset out = 0;
  for (int a : points_of(a_set))
    for (int b : points_of(b_set))
      if (c.composable(b, a)) out |= singleton(c.compose(b, a));
  return out;
}

bool conncat_validate(const FinCat& c, const Family& fam) {
  check_arrow_capacity(c);
  if (!validate_structure(c.arrow_count(), fam)) return false;
  for (Subset a : fam)
    for (Subset b : fam)
      if (!fam.contains(arrowset_compose(c, a, b))) return false;
  return true;
}

Family conncat_generate(const FinCat& c, const Family& fam, bool integral) {
  check_arrow_capacity(c);
  const int n = c.arrow_count();
  Family cur = generate(n, fam, integral);
  while (true) {
    std::vector<Subset> xs = cur.items();
    std::size_t before = xs.size();
    for (Subset a : cur.items())
      for (Subset b : cur.items()) {
        Subset ba = arrowset_compose(c, a, b);
        if (!cur.contains(ba)) xs.push_back(ba);
      }
    Family grown(std::move(xs));
    if (grown.size() == before) return cur;
    cur = generate(n, grown, false);
  }
}

FiniteOrdinal brunnian_order(const FinCat& c) {
  check_arrow_capacity(c);
  const int n = c.arrow_count();
  Family top{full_set(n)};
  return connectivity_order(trusted_space(n, conncat_generate(c, top, true)));
}

bool monoid_validate(const Monoid& m) {
  const int n = m.size();
  if (m.unit < 0 || m.unit >= n) return false;
  for (const auto& row : m.table) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  for (int a = 0; a < n; ++a) {
    if (m.table[m.unit][a] != a || m.table[a][m.unit] != a) return false;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.table[m.table[a][b]][c] != m.table[a][m.table[b][c]]) return false;
  }
  return true;
}

Subset monoid_product(const Monoid& m, Subset a, Subset b) {
  Subset out = 0;
  for (int x : points_of(a))
    for (int y : points_of(b)) out |= singleton(m.table[x][y]);
  return out;
}

MonoidFlags monoid_connective_check(const Monoid& m, const Family& fam) {
  if (!monoid_validate(m)) throw InputError("monoid table violates the monoid laws");
  if (m.size() > kMaxPoints) throw CapacityError("monoid with more than 63 elements");
  MonoidFlags out;
  const bool valid = validate_structure(m.size(), fam);
  out.connective = valid;
  for (Subset a : fam)
    for (Subset b : fam)
      if (out.connective && !fam.contains(monoid_product(m, a, b))) out.connective = false;
  if (valid && trusted_space(m.size(), fam).is_integral()) {
    bool ok = true;
    for (int x = 0; x < m.size() && ok; ++x)
      for (Subset k : fam)
        if (!fam.contains(monoid_product(m, singleton(x), k)) || !fam.contains(monoid_product(m, k, singleton(x)))) {
          ok = false;
          break;
        }
    out.via_translations = ok;
    if (ok != out.connective) throw std::logic_error("monoid: product and translation criteria disagree");
  }
  return out;
}

bool is_regular_law(const Monoid& m) {
  const int n = m.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (m.table[a][b] == m.table[a][c] || m.table[b][a] == m.table[c][a]) return false;
  return true;
}

bool inversion_preserves(const Monoid& m, const Family& fam) {
  const int n = m.size();
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.table[a][b] == m.unit && m.table[b][a] == m.unit) inv[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv[a] < 0) throw DomainError("monoid is not a group");
  for (Subset k : fam)
    if (!fam.contains(image(inv, k))) return false;
  return true;
}

Space object_connectivity(const FinCat& c) {
  const int n = c.object_count();
  check_points(n);
  std::vector<Subset> pairs;
  for (const auto& a : c.arrows()) pairs.push_back(singleton(a.dom) | singleton(a.cod));
  return trusted_space(n, generate(n, Family(std::move(pairs)), false));
}

}  // namespace connective
