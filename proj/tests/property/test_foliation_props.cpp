#include <gtest/gtest.h>

#include "connective/foliation.hpp"
#include "generators.hpp"

using namespace connective;

TEST(FoliationProperties, LeavesPartitionThePresentPoints) {
  gen::Rng rng(301);
  for (int i = 0; i < 500; ++i) {
    const int n = rng.uniform(0, 7);
    Foliation z = gen::random_foliation(rng, n, rng.chance(0.5));
    std::vector<Subset> ls = leaves(z);
    Subset covered = 0;
    for (Subset l : ls) {
      EXPECT_NE(l, kEmpty);
      EXPECT_FALSE(meets(covered, l));
      EXPECT_TRUE(z.internal().is_connected(l));
      covered |= l;
    }
    Subset absent = connected_components(z.internal()).absent;
    EXPECT_EQ(covered | absent, full_set(n));
    EXPECT_FALSE(meets(covered, absent));
    for (int p = 0; p < n; ++p) EXPECT_EQ(leaf_of(ls, p) >= 0, has(covered, p));
  }
}

TEST(FoliationProperties, LeafSetMetByOneExternalPartIsConnectedInTheQuotient) {
  gen::Rng rng(302);
  int exercised = 0;
  for (int i = 0; i < 500; ++i) {
    Foliation z = gen::random_foliation(rng, rng.uniform(1, 6));
    std::vector<Subset> ls = leaves(z);
    Space q = leaf_space_quotient(z);
    const int m = static_cast<int>(ls.size());
    for (Subset set = 1; set < full_set(m) + 1; ++set) {
      Subset u = 0;
      for (int j : points_of(set)) u |= ls[j];
      bool met = false;
      for (Subset k : z.external().connected()) {
        if (!is_subset(k, u)) continue;
        bool all = true;
        for (int j : points_of(set)) all = all && meets(k, ls[j]);
        met = met || all;
      }
      if (!met) continue;
      ++exercised;
      EXPECT_TRUE(q.is_connected(set));
    }
  }
  EXPECT_GT(exercised, 100);
}

TEST(FoliationProperties, InducedLeafSpaceIsFinerOnSixPoints) {
  gen::Rng rng(303);
  for (int i = 0; i < 300; ++i) {
    Foliation z = gen::random_foliation(rng, 6, rng.chance(0.5));
    Space in = leaf_space_induced(z), out = leaf_space_quotient(z);
    ASSERT_EQ(in.size(), out.size());
    for (Subset k : in.connected()) EXPECT_TRUE(out.is_connected(k));
  }
}

TEST(FoliationProperties, IdentityIsAStrictMorphismAndMorphismsCompose) {
  gen::Rng rng(304);
  int composed = 0;
  for (int i = 0; i < 3000; ++i) {
    const int n = rng.uniform(1, 4), m = rng.uniform(1, 4), k = rng.uniform(1, 4);
    Foliation a = gen::random_foliation(rng, n), b = gen::random_foliation(rng, m), c = gen::random_foliation(rng, k);
    PointMap id;
    for (int p = 0; p < n; ++p) id.push_back(p);
    EXPECT_TRUE(foliation_morphism_check(id, a, a, true));
    PointMap f = gen::random_map(rng, n, m), g = gen::random_map(rng, m, k);
    for (bool strict : {false, true}) {
      if (!foliation_morphism_check(f, a, b, strict) || !foliation_morphism_check(g, b, c, strict)) continue;
      PointMap gf;
      for (int p : f) gf.push_back(g[p]);
      ++composed;
      EXPECT_TRUE(foliation_morphism_check(gf, a, c, strict));
    }
  }
  EXPECT_GT(composed, 50);
}
