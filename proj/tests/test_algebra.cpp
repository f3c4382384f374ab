#include <gtest/gtest.h>

#include "dncrystal/algebra.hpp"

using namespace dncrystal;

namespace {

// Independent adjacency of the D_n^(1) diagram: 0-2, 1-2, chain 2..n-2, n-2 to n-1 and n.
bool adjacent(int n, int i, int j) {
  auto edge = [&](int a, int b) { return (i == a && j == b) || (i == b && j == a); };
  if (edge(0, 2) || edge(1, 2) || edge(n - 2, n - 1) || edge(n - 2, n)) return true;
  for (int k = 2; k + 1 <= n - 2; ++k)
    if (edge(k, k + 1)) return true;
  return false;
}

}  // namespace

TEST(Cartan, Examples) {
  EXPECT_EQ(cartan(AlgebraParams(4, 1), 0, 0), 2);
  EXPECT_EQ(cartan(AlgebraParams(4, 1), 0, 1), 0);
  // 3 is the branch node of D_5^(1): it meets 2, 4 and 5
  EXPECT_EQ(cartan(AlgebraParams(5, 1), 3, 5), -1);
  EXPECT_EQ(cartan(AlgebraParams(5, 1), 2, 5), 0);
  EXPECT_EQ(cartan(AlgebraParams(5, 1), 3, 4), -1);
}

TEST(Cartan, MatchesDiagramAndIsSymmetric) {
  for (int n = 4; n <= 8; ++n) {
    AlgebraParams p(n, 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const int want = i == j ? 2 : (adjacent(n, i, j) ? -1 : 0);
        EXPECT_EQ(cartan(p, i, j), want) << n << " " << i << " " << j;
      }
  }
}

TEST(Cartan, NullRootIsAnnihilated) {
  for (int n = 4; n <= 8; ++n) {
    AlgebraParams p(n, 1);
    for (int j = 0; j <= n; ++j) {
      int s = 0;
      for (int i = 0; i <= n; ++i) s += delta_coeff(p, i) * cartan(p, j, i);
      EXPECT_EQ(s, 0) << "n=" << n << " j=" << j;
    }
    EXPECT_EQ(delta_coeff(p, 0), 1);
    EXPECT_EQ(delta_coeff(p, n), 1);
    for (int i = 2; i <= n - 2; ++i) EXPECT_EQ(delta_coeff(p, i), 2);
  }
}

TEST(ClassicalAlpha, Examples) {
  AlgebraParams p(4, 1);
  EXPECT_EQ(classical_alpha(p, 2).coeffs, (std::vector<int>{-1, -1, 2, -1, -1}));
  EXPECT_EQ(classical_alpha(p, 0).coeffs, (std::vector<int>{2, 0, -1, 0, 0}));
  for (int n = 4; n <= 7; ++n)
    for (int i = 0; i <= n; ++i) EXPECT_EQ(classical_alpha(AlgebraParams(n, 1), i)[i], 2);
}

TEST(ClassicalAlpha, LevelZero) {
  for (int n = 4; n <= 7; ++n) {
    AlgebraParams p(n, 1);
    for (int i = 0; i <= n; ++i) EXPECT_EQ(level_of(p, classical_alpha(p, i)), 0);
  }
}

TEST(Level, Examples) {
  AlgebraParams p(4, 1);
  EXPECT_EQ(level_of(p, fundamental(4, 0) + fundamental(4, 4)), 2);
  EXPECT_EQ(level_of(p, fundamental(4, 2)), 2);
  EXPECT_EQ(level_of(p, ClassicalWeight(4)), 0);
}

TEST(DominantWeights, CountsAndLevels) {
  EXPECT_EQ(dominant_weights(AlgebraParams(4, 1)).size(), 4u);
  // level 2: Lambda_2, or two of {0,1,3,4} with repetition
  EXPECT_EQ(dominant_weights(AlgebraParams(4, 2)).size(), 11u);
  for (int l = 1; l <= 3; ++l)
    for (const auto& w : dominant_weights(AlgebraParams(5, l))) {
      EXPECT_TRUE(w.dominant());
      EXPECT_EQ(level_of(AlgebraParams(5, l), w), l);
    }
}

TEST(Params, Validation) {
  EXPECT_THROW(AlgebraParams(3, 1), DomainError);
  EXPECT_THROW(AlgebraParams(4, -1), DomainError);
  AlgebraParams p(4, 1);
  EXPECT_EQ(p.period(), 4);
  EXPECT_THROW(p.check_color(5), DomainError);
  EXPECT_THROW(p.check_color(-1), DomainError);
  EXPECT_NO_THROW(p.check_color(4));
}

TEST(BlockCount, HalvesAndWholes) {
  BlockCount k(4);
  k.add(0, 1);
  k.halves[4] += 1;
  EXPECT_EQ(k.whole(0), 1);
  EXPECT_THROW(k.whole(4), IntegrityError);
  k.halves[4] += 1;
  EXPECT_EQ(k.wholes(), (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(k.total(), 2);
}

TEST(ClassicalWeight, Str) { EXPECT_EQ((fundamental(4, 0) + fundamental(4, 4)).str(), "(1,0,0,0,1)"); }
