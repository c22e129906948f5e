#include <gtest/gtest.h>

#include "connective/order.hpp"
#include "fixtures.hpp"

using namespace connective;

namespace {

Subset S(std::initializer_list<int> pts) { return subset_of(pts); }

}  // namespace

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(fx::borromean(), S({0, 1, 2})));
  EXPECT_FALSE(is_irreducible(fx::path3(), S({0, 1, 2})));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(is_irreducible(fx::path3(), singleton(i)));
  EXPECT_FALSE(is_irreducible(fx::path3(), kEmpty));
}

TEST(Irreducible, NotConnectedIsDomainError) {
  EXPECT_THROW(is_irreducible(fx::borromean(), S({0, 1})), DomainError);
}

TEST(Irreducibles, Examples) {
  EXPECT_EQ(irreducibles(fx::borromean()).elements, (Family{S({0}), S({1}), S({2}), S({0, 1, 2})}));
  EXPECT_EQ(irreducibles(fx::path3()).elements, (Family{S({0}), S({1}), S({2}), S({0, 1}), S({1, 2})}));
  EXPECT_EQ(irreducibles(fx::chain_space(3)).elements, (Family{S({0}), S({0, 1}), S({0, 1, 2})}));
}

TEST(Height, Examples) {
  EXPECT_EQ(poset_height(IrrPoset{}).value, 1U);
  EXPECT_EQ(poset_height(IrrPoset{Family{S({0}), S({1})}}).value, 2U);
  EXPECT_EQ(poset_height(IrrPoset{Family{S({0}), S({0, 1}), S({0, 1, 2})}}).value, 4U);
}

TEST(Order, Anchors) {
  EXPECT_EQ(connectivity_order(fx::borromean()).value, 1U);
  EXPECT_EQ(connectivity_order(fx::path3()).value, 1U);
  EXPECT_EQ(connectivity_order(Space::desintegrated(2)).value, 0U);
  // An antichain of irreducibles has order 0.
  EXPECT_EQ(connectivity_order(Space::discrete(4)).value, 0U);
}

TEST(Order, ChainSpacesAndAlternative) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(connectivity_order(fx::chain_space(n)).value, static_cast<std::size_t>(n - 1));
    EXPECT_EQ(connectivity_order_predecessor(fx::chain_space(n)).value, static_cast<std::size_t>(n));
  }
}
