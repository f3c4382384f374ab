#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "dncrystal/coord_crystal.hpp"

using namespace dncrystal;

namespace {

CoordElement B(const std::string& s) { return CoordElement::parse(s); }

// Brute force over all 2n-tuples with sum l, dropping x_n * xbar_n > 0.
size_t brute_count(int n, int l) {
  size_t count = 0;
  std::vector<int> v(2 * n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == 2 * n - 1) {
      v[pos] = left;
      // printed order: x_1..x_n, xbar_n..xbar_1, so x_n and xbar_n are adjacent
      if (!(v[n - 1] > 0 && v[n] > 0)) ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      v[pos] = a;
      rec(pos + 1, left - a);
    }
  };
  rec(0, l);
  return count;
}

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_B(AlgebraParams(4, 1)).size(), 8u);
  EXPECT_EQ(enumerate_B(AlgebraParams(4, 2)).size(), 35u);
  EXPECT_EQ(enumerate_B(AlgebraParams(4, 0)).size(), 1u);
  for (int n = 4; n <= 6; ++n)
    for (int l = 0; l <= 3; ++l) EXPECT_EQ(enumerate_B(AlgebraParams(n, l)).size(), brute_count(n, l)) << n << l;
}

TEST(Enumerate, SortedValidDistinct) {
  AlgebraParams p(5, 2);
  auto all = enumerate_B(p);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<CoordElement>(all.begin(), all.end()).size(), all.size());
  for (const auto& b : all) EXPECT_TRUE(is_valid(p, b));
  EXPECT_FALSE(is_valid(AlgebraParams(4, 2), B("(0,0,0,1|1,0,0,0)")));
  EXPECT_FALSE(is_valid(AlgebraParams(4, 2), B("(1,0,0,0|0,0,0,0)")));
}

TEST(CoordElement, ParseAndPrint) {
  const auto b = B("(1,0,2,0|0,3,0,1)");
  EXPECT_EQ(b.str(), "(1,0,2,0|0,3,0,1)");
  EXPECT_EQ(b.x(3), 2);
  EXPECT_EQ(b.xb(3), 3);
  EXPECT_EQ(b.xb(1), 1);
  EXPECT_EQ(b.level(), 7);
  EXPECT_THROW(B("(1,0|0"), DomainError);
}

TEST(CoordF, Examples) {
  AlgebraParams p(4, 1);
  EXPECT_EQ(coord_f(p, 1, B("(1,0,0,0|0,0,0,0)")), B("(0,1,0,0|0,0,0,0)"));
  EXPECT_EQ(coord_f(p, 0, B("(0,1,0,0|0,0,0,0)")), std::nullopt);
  EXPECT_EQ(coord_f(p, 4, B("(0,0,0,1|0,0,0,0)")), B("(0,0,0,0|0,1,0,0)"));
}

TEST(CoordE, Examples) {
  AlgebraParams p(4, 1);
  EXPECT_EQ(coord_e(p, 0, B("(0,1,0,0|0,0,0,0)")), B("(0,0,0,0|0,0,0,1)"));
  EXPECT_EQ(coord_e(p, 1, B("(0,1,0,0|0,0,0,0)")), B("(1,0,0,0|0,0,0,0)"));
  EXPECT_EQ(coord_e(p, 3, B("(1,0,0,0|0,0,0,0)")), std::nullopt);
}

TEST(CoordPhiEps, Examples) {
  AlgebraParams p(4, 2);
  EXPECT_EQ(coord_eps_vector(p, B("(1,0,0,0|1,0,0,0)")), (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(coord_phi_vector(p, B("(0,0,0,1|0,0,0,1)")), (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(coord_cwt(p, B("(0,0,0,1|0,0,0,1)")).coeffs, (std::vector<int>{1, -1, 0, -1, 1}));
}

TEST(CoordCrystal, AxiomsExhaustive) {
  for (auto [n, l] : {std::pair{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {6, 2}}) {
    AlgebraParams p(n, l);
    for (const auto& b : enumerate_B(p)) {
      EXPECT_EQ(level_of(p, coord_cwt(p, b)), 0) << b.str();
      for (int i = 0; i <= n; ++i) {
        EXPECT_GE(coord_phi(p, i, b), 0);
        EXPECT_GE(coord_eps(p, i, b), 0);
        EXPECT_EQ(coord_cwt(p, b)[i], coord_phi(p, i, b) - coord_eps(p, i, b));
        if (auto c = coord_f(p, i, b)) {
          EXPECT_TRUE(is_valid(p, *c)) << b.str() << " f" << i;
          EXPECT_EQ(coord_e(p, i, *c), b) << b.str() << " f" << i;
          EXPECT_EQ(coord_cwt(p, *c), coord_cwt(p, b) - classical_alpha(p, i));
        }
        int len = 0;
        for (auto c = coord_f(p, i, b); c; c = coord_f(p, i, *c)) ++len;
        EXPECT_EQ(len, coord_phi(p, i, b)) << b.str() << " i=" << i;
        len = 0;
        for (auto c = coord_e(p, i, b); c; c = coord_e(p, i, *c)) ++len;
        EXPECT_EQ(len, coord_eps(p, i, b)) << b.str() << " i=" << i;
      }
    }
  }
}

TEST(CoordCrystal, MinimalElementExamples) {
  EXPECT_EQ(minimal_element(AlgebraParams(4, 2), fundamental(4, 0) + fundamental(4, 4)), B("(1,0,0,0|1,0,0,0)"));
  const auto b = minimal_element(AlgebraParams(4, 1), fundamental(4, 0));
  EXPECT_EQ(coord_eps_vector(AlgebraParams(4, 1), b), (std::vector<int>{1, 0, 0, 0, 0}));
  EXPECT_EQ(maximal_element(AlgebraParams(4, 2), fundamental(4, 0) + fundamental(4, 4)), B("(0,0,0,1|0,0,0,1)"));
}

TEST(CoordCrystal, Perfectness) {
  for (int n : {4, 5})
    for (int l = 1; l <= 3; ++l) {
      AlgebraParams p(n, l);
      const auto all = enumerate_B(p);
      for (const auto& lambda : dominant_weights(p)) {
        int eps_hits = 0, phi_hits = 0;
        for (const auto& b : all) {
          eps_hits += coord_eps_vector(p, b) == lambda.coeffs;
          phi_hits += coord_phi_vector(p, b) == lambda.coeffs;
        }
        EXPECT_EQ(eps_hits, 1) << "n=" << n << " lambda=" << lambda.str();
        EXPECT_EQ(phi_hits, 1) << "n=" << n << " lambda=" << lambda.str();
        EXPECT_EQ(coord_eps_vector(p, minimal_element(p, lambda)), lambda.coeffs);
      }
    }
}

TEST(CoordCrystal, BadColor) {
  AlgebraParams p(4, 1);
  EXPECT_THROW(coord_f(p, 5, B("(1,0,0,0|0,0,0,0)")), DomainError);
}
