#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "dncrystal/algebra.hpp"

namespace dncrystal {

struct GraphNode {
  int id = 0;
  int depth = 0;
  std::string label;
  std::vector<int> cwt;
  std::vector<int> k;
  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  int from = 0;
  int to = 0;
  int color = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct CrystalGraph {
  int n = 4;
  int level = 1;
  std::vector<int> lambda;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  int root = 0;
  friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;
};

/// Operator interface a realization exposes to the generator.
template <class State>
struct Realization {
  int colors = 0;
  std::function<std::optional<State>(int, const State&)> f;
  std::function<std::string(const State&)> key;
  std::function<std::string(const State&)> describe;
  std::function<std::vector<int>(const State&)> cwt;
  std::function<std::vector<int>(const State&)> kvec;
};

struct GenerateOptions {
  int max_depth = 0;
  size_t node_budget = 1000000;
  int threads = 1;
};

/// Throws IntegrityError naming the first violated invariant.
void check_graph_invariants(const CrystalGraph& g);
bool colored_isomorphic(const CrystalGraph& a, const CrystalGraph& b);
/// (depth, cwt, k) -> count.
std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> weight_multiplicities(const CrystalGraph& g);

std::string export_dot(const CrystalGraph& g);
std::string export_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const std::string& text);

/// BFS from root, colors ascending, node ids in discovery order.
/// With threads > 1 the children of a frontier are computed concurrently and
/// merged in frontier order, so the output does not depend on scheduling.
template <class State>
CrystalGraph generate(const Realization<State>& r, const State& root, const GenerateOptions& opt,
                      std::vector<State>* states_out = nullptr) {
  CrystalGraph g;
  std::vector<State> states{root};
  std::unordered_map<std::string, int> index{{r.key(root), 0}};
  g.nodes.push_back({0, 0, r.describe(root), r.cwt(root), r.kvec(root)});

  std::vector<int> frontier{0};
  for (int depth = 0; depth < opt.max_depth && !frontier.empty(); ++depth) {
    using Children = std::vector<std::optional<State>>;
    std::vector<Children> kids(frontier.size());
    auto work = [&](size_t lo, size_t hi) {
      for (size_t q = lo; q < hi; ++q) {
        kids[q].resize(r.colors);
        for (int c = 0; c < r.colors; ++c) kids[q][c] = r.f(c, states[frontier[q]]);
      }
    };
    const size_t nthreads = std::max<size_t>(1, std::min<size_t>(opt.threads, frontier.size()));
    if (nthreads == 1) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errs(nthreads);
      const size_t chunk = (frontier.size() + nthreads - 1) / nthreads;
      for (size_t t = 0; t < nthreads; ++t) {
        const size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
        pool.emplace_back([&, t, lo, hi] {
          try {
            work(lo, hi);
          } catch (...) {
            errs[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    }

    std::vector<int> next;
    for (size_t q = 0; q < frontier.size(); ++q) {
      for (int c = 0; c < r.colors; ++c) {
        auto& child = kids[q][c];
        if (!child) continue;
        const std::string key = r.key(*child);
        auto it = index.find(key);
        int id;
        if (it == index.end()) {
          if (states.size() >= opt.node_budget) throw ResourceError("node budget exceeded");
          id = static_cast<int>(states.size());
          index.emplace(key, id);
          g.nodes.push_back({id, depth + 1, r.describe(*child), r.cwt(*child), r.kvec(*child)});
          states.push_back(std::move(*child));
          next.push_back(id);
        } else {
          id = it->second;
        }
        g.edges.push_back({frontier[q], id, c});
      }
    }
    frontier = std::move(next);
  }
  if (states_out) *states_out = std::move(states);
  return g;
}

}  // namespace dncrystal
