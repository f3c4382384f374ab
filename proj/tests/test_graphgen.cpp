#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dncrystal/io.hpp"

using namespace dncrystal;

namespace {

CrystalGraph walls(std::vector<int> a, int depth, int threads = 1) {
  const int n = static_cast<int>(a.size()) - 1;
  auto g = std::make_shared<GroundWall>(n, ClassicalWeight(a));
  GenerateOptions opt;
  opt.max_depth = depth;
  opt.threads = threads;
  CrystalGraph c = generate(wall_realization(n), ground_wall(g), opt);
  c.n = n;
  c.level = g->level();
  c.lambda = a;
  return c;
}

CrystalGraph paths(std::vector<int> a, int depth) {
  const int n = static_cast<int>(a.size()) - 1;
  auto g = std::make_shared<GroundPath>(n, ClassicalWeight(a));
  GenerateOptions opt;
  opt.max_depth = depth;
  CrystalGraph c = generate(path_realization(n), ground_path(g), opt);
  c.n = n;
  c.level = g->level();
  c.lambda = a;
  return c;
}

std::set<int> out_colors(const CrystalGraph& g, int v) {
  std::set<int> s;
  for (const auto& e : g.edges)
    if (e.from == v) s.insert(e.color);
  return s;
}

int target(const CrystalGraph& g, int v, int color) {
  for (const auto& e : g.edges)
    if (e.from == v && e.color == color) return e.to;
  return -1;
}

}  // namespace

TEST(Generate, DepthZero) {
  const auto g = walls({1, 0, 0, 0, 1}, 0);
  EXPECT_EQ(g.nodes.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(export_dot(g), "digraph crystal {\n  rankdir=TB;\n  0 [label=\"ground\"];\n}\n");
}

TEST(Generate, FigureTopLevels) {
  const auto g1 = walls({1, 0, 0, 0, 1}, 1);
  EXPECT_EQ(g1.nodes.size(), 3u);
  EXPECT_EQ(out_colors(g1, 0), (std::set<int>{0, 4}));

  const auto g = walls({1, 0, 0, 0, 1}, 2);
  const int a = target(g, 0, 0), b = target(g, 0, 4);
  EXPECT_EQ(out_colors(g, a), (std::set<int>{2, 4}));
  EXPECT_EQ(out_colors(g, b), (std::set<int>{0, 2}));
  EXPECT_EQ(target(g, a, 4), target(g, b, 0));
  // f2 f0, f4 f0 = f0 f4, f2 f4 carry different k-vectors
  EXPECT_EQ(g.nodes.size(), 6u);
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_NO_THROW(check_graph_invariants(g));
}

TEST(Generate, ParallelMatchesSerial) {
  for (int threads : {2, 3, 8}) {
    EXPECT_EQ(walls({1, 0, 0, 0, 1}, 5, threads), walls({1, 0, 0, 0, 1}, 5));
    EXPECT_EQ(export_json(walls({0, 0, 1, 0, 0}, 4, threads)), export_json(walls({0, 0, 1, 0, 0}, 4)));
  }
}

TEST(Generate, NodeBudget) {
  auto g = std::make_shared<GroundWall>(4, ClassicalWeight(std::vector<int>{1, 0, 0, 0, 1}));
  GenerateOptions opt;
  opt.max_depth = 6;
  opt.node_budget = 10;
  EXPECT_THROW(generate(wall_realization(4), ground_wall(g), opt), ResourceError);
}

TEST(Isomorphism, SelfAndRealizations) {
  const auto w = walls({1, 0, 0, 0, 1}, 6);
  EXPECT_TRUE(colored_isomorphic(w, w));
  EXPECT_TRUE(colored_isomorphic(w, paths({1, 0, 0, 0, 1}, 6)));
}

TEST(Isomorphism, DiagramAutomorphismIsNotIdentity) {
  const auto a = walls({1, 0, 0, 0, 0}, 3), b = walls({0, 1, 0, 0, 0}, 3);
  EXPECT_FALSE(colored_isomorphic(a, b));
  // swapping colors 0 and 1 does identify them
  CrystalGraph swapped = b;
  for (auto& e : swapped.edges)
    if (e.color <= 1) e.color = 1 - e.color;
  EXPECT_TRUE(colored_isomorphic(a, swapped));
}

TEST(Multiplicities, GroundAndTotals) {
  const auto w = walls({1, 0, 0, 0, 1}, 5);
  const auto m = weight_multiplicities(w);
  int total = 0;
  for (const auto& [key, count] : m) total += count;
  EXPECT_EQ(total, static_cast<int>(w.nodes.size()));
  EXPECT_EQ(m.at({0, w.nodes[0].cwt, w.nodes[0].k}), 1);
  EXPECT_EQ(m, weight_multiplicities(paths({1, 0, 0, 0, 1}, 5)));
}

TEST(Invariants, DetectsBrokenGraphs) {
  CrystalGraph g = walls({1, 0, 0, 0, 1}, 2);
  CrystalGraph bad = g;
  bad.edges.push_back({1, 0, 3});
  EXPECT_THROW(check_graph_invariants(bad), IntegrityError);
  bad = g;
  bad.edges.push_back({bad.edges[0].from, 5, bad.edges[0].color});
  EXPECT_THROW(check_graph_invariants(bad), IntegrityError);
  bad = g;
  bad.nodes.push_back({6, 3, "orphan", g.nodes[0].cwt, g.nodes[0].k});
  EXPECT_THROW(check_graph_invariants(bad), IntegrityError);
}

TEST(Export, JsonRoundtripIsByteIdentical) {
  const auto g = walls({1, 0, 0, 0, 1}, 4);
  const std::string text = export_json(g);
  const CrystalGraph back = graph_from_json(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(export_json(back), text);
  EXPECT_EQ(export_dot(back), export_dot(g));
  EXPECT_THROW(graph_from_json("[1,2"), DomainError);
}

TEST(Export, DotShape) {
  const std::string dot = export_dot(walls({1, 0, 0, 0, 1}, 2));
  EXPECT_EQ(dot.rfind("digraph crystal {\n  rankdir=TB;\n", 0), 0u);
  EXPECT_NE(dot.find("  0 -> 1 [label=\"0\"];\n"), std::string::npos);
  EXPECT_NE(dot.find("  0 -> 2 [label=\"4\"];\n"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 3 + 6 + 6);
}

TEST(Perfect, CoordsAndSlicesAgree) {
  for (auto [n, l] : {std::pair{4, 1}, {4, 2}, {5, 1}}) {
    AlgebraParams p(n, l);
    const auto a = perfect_crystal_graph(p, PerfectRealization::Coords);
    const auto b = perfect_crystal_graph(p, PerfectRealization::Slices);
    EXPECT_EQ(a.nodes.size(), enumerate_B(p).size());
    EXPECT_EQ(a.edges, b.edges);
  }
}
