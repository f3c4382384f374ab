#include <gtest/gtest.h>

#include "dncrystal/io.hpp"

using namespace dncrystal;

namespace {

std::shared_ptr<GroundPath> gpath(std::vector<int> a) {
  const int n = static_cast<int>(a.size()) - 1;
  return std::make_shared<GroundPath>(n, ClassicalWeight(std::move(a)));
}

// Plain (0,1)-cancellation of p(T-1) x ... x p(0), each factor written as
// eps_i ones then phi_i zeros. Returns surviving (ones, zeros) positions.
std::pair<std::vector<int>, std::vector<int>> naive(int i, const Path& p, int T) {
  const AlgebraParams& prm = p.ground->params();
  std::vector<std::pair<int, char>> word;
  for (int k = T - 1; k >= 0; --k) {
    const auto& b = p.component(k);
    for (int a = 0; a < coord_eps(prm, i, b); ++a) word.push_back({k, '1'});
    for (int a = 0; a < coord_phi(prm, i, b); ++a) word.push_back({k, '0'});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t q = 0; q + 1 < word.size(); ++q)
      if (word[q].second == '0' && word[q + 1].second == '1') {
        word.erase(word.begin() + q, word.begin() + q + 2);
        changed = true;
        break;
      }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (auto [k, c] : word) (c == '1' ? out.first : out.second).push_back(k);
  return out;
}

std::vector<Path> bfs_paths(const std::shared_ptr<GroundPath>& g, int depth) {
  GenerateOptions opt;
  opt.max_depth = depth;
  std::vector<Path> states;
  generate(path_realization(g->n()), ground_path(g), opt, &states);
  return states;
}

}  // namespace

TEST(GroundPath, Recurrence) {
  for (int n : {4, 5})
    for (int l = 1; l <= 3; ++l)
      for (const auto& lambda : dominant_weights(AlgebraParams(n, l))) {
        GroundPath g(n, lambda);
        EXPECT_EQ(coord_phi_vector(g.params(), g.element(0)), lambda.coeffs);
        for (int k = 0; k <= 12; ++k)
          EXPECT_EQ(coord_phi_vector(g.params(), g.element(k + 1)), coord_eps_vector(g.params(), g.element(k)));
        EXPECT_GE(g.cycle_length(), 1);
      }
}

TEST(PathOps, FirstMoveTouchesComponentZero) {
  auto g = gpath({1, 0, 0, 0, 1});
  const Path p = ground_path(g);
  auto q = path_f(0, p);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->K(), 1);
  EXPECT_NE(q->component(0), g->element(0));
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(path_e(i, p), std::nullopt);
}

TEST(PathOps, WeightBookkeeping) {
  auto g = gpath({1, 0, 0, 0, 1});
  const Path p = ground_path(g);
  EXPECT_EQ(path_wt(p).first, g->lambda());
  EXPECT_EQ(path_wt(p).second.wholes(), std::vector<int>(5, 0));
  auto q = path_f(4, *path_f(0, p));
  ASSERT_TRUE(q);
  EXPECT_EQ(path_wt(*q).second.wholes(), (std::vector<int>{1, 0, 0, 0, 1}));
  Path anon = *q;
  anon.k.reset();
  EXPECT_THROW(path_wt(anon), UnsupportedInput);
}

TEST(PathOps, Axioms) {
  for (std::vector<int> a : {std::vector<int>{1, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {1, 1, 0, 0, 0, 0}}) {
    auto g = gpath(a);
    const AlgebraParams prm = g->params();
    for (const auto& p : bfs_paths(g, 5))
      for (int i = 0; i <= g->n(); ++i) {
        auto q = path_f(i, p);
        if (q) {
          EXPECT_EQ(path_e(i, *q), p);
          EXPECT_EQ(path_cwt(*q), path_cwt(p) - classical_alpha(prm, i));
        }
        EXPECT_EQ(path_phi(i, p) == 0, !q.has_value());
      }
  }
}

// The telescoped tail must match a plain reduction over a long finite
// stretch of ground components, once the ones of the cut end are dropped.
TEST(PathSignature, TelescopingMatchesTruncatedTails) {
  for (std::vector<int> a : {std::vector<int>{1, 0, 0, 0, 1}, {2, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0, 1}}) {
    auto g = gpath(a);
    for (const auto& p : bfs_paths(g, 4))
      for (int i = 0; i <= g->n(); ++i) {
        const Signature s = path_signature(i, p);
        for (int len : {4, 8, 16}) {
          const int T = p.K() + len;
          auto [ones, zeros] = naive(i, p, T);
          std::vector<int> kept;
          for (int k : ones)
            if (k != T - 1) kept.push_back(k);
          EXPECT_EQ(kept, s.one_positions) << describe(p) << " i=" << i << " len=" << len;
          EXPECT_EQ(zeros, s.zero_positions) << describe(p) << " i=" << i << " len=" << len;
        }
      }
  }
}

TEST(Json, PathRoundtrip) {
  auto g = gpath({1, 0, 0, 0, 1});
  for (const auto& p : bfs_paths(g, 4)) {
    const std::string text = path_to_json(p);
    const Path q = path_from_json(text, g);
    EXPECT_EQ(q, p);
    EXPECT_EQ(q.k, p.k);
    EXPECT_EQ(path_to_json(q), text);
  }
  EXPECT_THROW(path_from_json(R"js({"lambda":[1,0,0,0,1],"components":["(1,0,0,0|0,0,0,0)"]})js"), DomainError);
}
