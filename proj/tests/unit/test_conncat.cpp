#include <gtest/gtest.h>

#include "connective/conncat.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace connective;

namespace {

Subset S(std::initializer_list<int> pts) { return subset_of(pts); }

// Fixpoint of union closure and arrow-set composition, by full rescans.
Family categorical_closure(const FinCat& c, const Family& fam, bool integral) {
  const int n = c.arrow_count();
  Family cur = oracle::closure(n, fam, integral);
  for (;;) {
    Family next = cur;
    for (Subset a : cur)
      for (Subset b : cur) next.insert(arrowset_compose(c, a, b));
    next = oracle::closure(n, next, integral);
    if (next == cur) return cur;
    cur = next;
  }
}

Family all_subsets(int n) {
  Family out;
  for (Subset s = 0; s <= full_set(n); ++s) out.insert(s);
  return out;
}

}  // namespace

TEST(ArrowsetCompose, Examples) {
  FinCat c = fx::arrow2();
  int id_s = c.find_arrow("id_S"), f = c.find_arrow("f");
  EXPECT_EQ(arrowset_compose(c, singleton(id_s), singleton(f)), singleton(f));
  EXPECT_EQ(arrowset_compose(c, singleton(f), singleton(f)), kEmpty);
  FinCat g = cyclic_group(3);
  EXPECT_EQ(arrowset_compose(g, full_set(3), full_set(3)), full_set(3));
  EXPECT_EQ(arrowset_compose(g, S({1}), S({1})), S({2}));
}

TEST(ConncatValidate, Examples) {
  FinCat g = cyclic_group(3);
  EXPECT_TRUE(conncat_validate(g, Family{kEmpty, S({0}), S({1}), S({2}), full_set(3)}));
  EXPECT_TRUE(conncat_validate(fx::arrow2(), all_subsets(3)));
  // {r1} connected forces {r2} = {r1}∘{r1}.
  EXPECT_FALSE(conncat_validate(g, Family{kEmpty, S({1})}));
  // Not even a connectivity structure.
  EXPECT_FALSE(conncat_validate(g, Family{kEmpty, S({0, 1}), S({1, 2})}));
}

TEST(ConncatGenerate, Examples) {
  FinCat g = cyclic_group(3);
  Family expected{kEmpty, S({0}), S({1}), S({2}), full_set(3)};
  EXPECT_EQ(categorical_closure(g, Family{full_set(3)}, true), expected);
  EXPECT_EQ(conncat_generate(g, Family{full_set(3)}, true), expected);
  EXPECT_EQ(conncat_generate(g, Family{}, false), Family{kEmpty});
  EXPECT_EQ(conncat_generate(fx::arrow2(), Family{}, false), Family{kEmpty});
  EXPECT_EQ(conncat_generate(g, Family{S({1})}, false), (Family{kEmpty, S({0}), S({1}), S({2})}));
}

TEST(ConncatGenerate, ArrowCategoryPair) {
  FinCat c = fx::arrow2();
  Subset pair = S({c.find_arrow("id_S"), c.find_arrow("f")});
  Family expected{kEmpty, S({0}), S({1}), S({2}), pair};
  EXPECT_EQ(categorical_closure(c, Family{pair}, true), expected);
  EXPECT_EQ(conncat_generate(c, Family{pair}, true), expected);
}

TEST(BrunnianOrder, Groups) {
  EXPECT_EQ(brunnian_order(cyclic_group(2)).value, 1U);
  EXPECT_EQ(brunnian_order(cyclic_group(3)).value, 1U);
  EXPECT_EQ(brunnian_order(symmetric_group3()).value, 1U);
  EXPECT_EQ(brunnian_order(discrete_category(1)).value, 0U);
}

TEST(Monoid, SaturatingAdditionIntervals) {
  Monoid m;
  for (int a = 0; a < 6; ++a) {
    m.table.emplace_back();
    for (int b = 0; b < 6; ++b) m.table.back().push_back(std::min(a + b, 5));
  }
  ASSERT_TRUE(monoid_validate(m));
  Family intervals{kEmpty};
  for (int lo = 0; lo < 6; ++lo)
    for (int hi = lo; hi < 6; ++hi) intervals.insert(full_set(hi + 1) & ~full_set(lo));
  MonoidFlags fl = monoid_connective_check(m, intervals);
  EXPECT_TRUE(fl.connective);
  ASSERT_TRUE(fl.via_translations.has_value());
  EXPECT_TRUE(*fl.via_translations);
  EXPECT_FALSE(is_regular_law(m));
}

TEST(Monoid, CyclicOfOrderTwo) {
  Monoid m{{{0, 1}, {1, 0}}, 0};
  EXPECT_TRUE(monoid_connective_check(m, all_subsets(2)).connective);
  MonoidFlags fl = monoid_connective_check(m, Family{kEmpty, S({0}), S({1})});
  EXPECT_TRUE(fl.connective);
  EXPECT_EQ(fl.via_translations, std::optional<bool>(true));
  EXPECT_TRUE(is_regular_law(m));
  EXPECT_TRUE(inversion_preserves(m, all_subsets(2)));
}

TEST(Monoid, ProductLeavesStructure) {
  // Z/3 with {0,1} connected: {0,1}*{0,1} = {0,1,2} is not connected.
  Monoid m{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0};
  Family fam{kEmpty, S({0}), S({1}), S({2}), S({0, 1})};
  MonoidFlags fl = monoid_connective_check(m, fam);
  EXPECT_FALSE(fl.connective);
  EXPECT_EQ(fl.via_translations, std::optional<bool>(false));
  EXPECT_FALSE(monoid_connective_check(m, Family{kEmpty, S({0, 1}), S({1, 2})}).connective);
}

TEST(ObjectConnectivity, Examples) {
  EXPECT_EQ(object_connectivity(fx::arrow2()), Space::grossier(2));
  EXPECT_EQ(object_connectivity(discrete_category(3)), Space::discrete(3));
  std::vector<Arrow> arrows{{"ia", 0, 0}, {"ib", 1, 1}, {"ic", 2, 2}, {"id", 3, 3}, {"f", 0, 1}, {"g", 2, 3}};
  FinCat two = make_category({"a", "b", "c", "d"}, arrows, {0, 1, 2, 3}, {});
  Components comps = connected_components(object_connectivity(two));
  EXPECT_EQ(comps.components, (std::vector<Subset>{S({0, 1}), S({2, 3})}));
}
