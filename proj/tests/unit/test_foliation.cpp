#include <gtest/gtest.h>

#include "connective/foliation.hpp"
#include "fixtures.hpp"

using namespace connective;

namespace {

Subset S(std::initializer_list<int> pts) { return subset_of(pts); }

}  // namespace

TEST(Foliation, SizesMustMatch) { EXPECT_THROW(Foliation(Space::discrete(2), Space::discrete(3)), InputError); }

TEST(Regular, Examples) {
  EXPECT_FALSE(is_regular(fx::three_leaves()));
  EXPECT_TRUE(is_regular(Foliation(Space::desintegrated(3), fx::borromean())));
  EXPECT_TRUE(is_regular(Foliation(fx::path3(), fx::path3())));
}

TEST(Leaves, Examples) {
  EXPECT_EQ(leaves(fx::three_leaves()), (std::vector<Subset>{S({0, 1}), S({2, 3}), S({4, 5})}));
  EXPECT_TRUE(leaves(Foliation(Space::desintegrated(3), fx::path3())).empty());
  EXPECT_EQ(leaves(Foliation(Space::grossier(3), fx::path3())), std::vector<Subset>{S({0, 1, 2})});
}

TEST(LeafSpace, ThreeLeavesQuotientAndInduced) {
  Foliation z = fx::three_leaves();
  EXPECT_EQ(leaf_space_quotient(z), Space(3, Family{kEmpty, S({0, 1}), S({1, 2}), S({0, 1, 2})}));
  EXPECT_EQ(leaf_space_induced(z), Space::desintegrated(3));
}

TEST(LeafSpace, GrossierBoth) {
  Foliation z(Space::grossier(3), Space::grossier(3));
  EXPECT_EQ(leaf_space_induced(z), Space::grossier(1));
  EXPECT_EQ(leaf_space_quotient(z), Space::grossier(1));
}

TEST(LeafSpace, LeafOutsideExternalIsNotIntegral) {
  // One leaf {0,1}; externally only {0} is connected.
  Foliation z(Space(2, Family{kEmpty, S({0, 1})}), Space(2, Family{kEmpty, S({0})}));
  EXPECT_EQ(leaf_space_induced(z), Space::desintegrated(1));
  EXPECT_EQ(leaf_space_quotient(z), Space::grossier(1));
  // A leaf {2} containing no external connected part.
  Foliation w(Space(3, Family{kEmpty, S({0}), S({1}), S({2})}), Space(3, Family{kEmpty, S({0}), S({1})}));
  EXPECT_EQ(leaf_space_quotient(w), Space(3, Family{kEmpty, S({0}), S({1})}));
}

TEST(LeafSpace, SingletonLeavesGiveExternal) {
  Foliation z(Space::discrete(3), fx::path3());
  EXPECT_EQ(leaf_space_quotient(z), fx::path3());
  EXPECT_EQ(leaf_space_induced(z), fx::path3());
}

TEST(FoliationMorphism, Examples) {
  Foliation z = fx::three_leaves();
  EXPECT_TRUE(foliation_morphism_check({0, 1, 2, 3, 4, 5}, z, z, false));
  EXPECT_TRUE(foliation_morphism_check({0, 1, 2, 3, 4, 5}, z, z, true));
  Foliation top(Space::grossier(2), Space::grossier(2));
  EXPECT_TRUE(foliation_morphism_check({1, 0, 1, 0, 0, 1}, z, top, false));
  // The leaf {0,1} goes onto {0} only, not the whole leaf of the target.
  EXPECT_FALSE(foliation_morphism_check({0, 0, 1, 1, 0, 1}, z, top, true));
  Foliation point(Space::grossier(1), Space::grossier(1));
  EXPECT_TRUE(foliation_morphism_check({0, 0, 0, 0, 0, 0}, z, point, true));
}
