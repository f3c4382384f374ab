#include "dncrystal/graphgen.hpp"

#include <json.hpp>
#include <queue>
#include <set>

namespace dncrystal {

using nlohmann::ordered_json;

void check_graph_invariants(const CrystalGraph& g) {
  const int V = static_cast<int>(g.nodes.size());
  if (V == 0) throw IntegrityError("graph has no nodes");
  std::set<std::pair<int, int>> out, in;
  std::vector<std::vector<int>> adj(V);
  for (const auto& e : g.edges) {
    if (e.from < 0 || e.from >= V || e.to < 0 || e.to >= V) throw IntegrityError("edge endpoint out of range");
    if (e.to == g.root) throw IntegrityError("root has an incoming edge");
    if (!out.insert({e.from, e.color}).second) throw IntegrityError("two outgoing edges of one color");
    if (!in.insert({e.to, e.color}).second) throw IntegrityError("two incoming edges of one color");
    adj[e.from].push_back(e.to);
  }
  std::vector<bool> seen(V, false);
  std::queue<int> q;
  q.push(g.root);
  seen[g.root] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
  }
  if (count != V) throw IntegrityError("graph has nodes unreachable from the root");
}

bool colored_isomorphic(const CrystalGraph& a, const CrystalGraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  const int V = static_cast<int>(a.nodes.size());
  auto table = [V](const CrystalGraph& g) {
    std::vector<std::map<int, int>> t(V);
    for (const auto& e : g.edges) t[e.from][e.color] = e.to;
    return t;
  };
  const auto ta = table(a), tb = table(b);
  std::vector<int> fwd(V, -1), bwd(V, -1);
  fwd[a.root] = b.root;
  bwd[b.root] = a.root;
  std::queue<int> q;
  q.push(a.root);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    const int v = fwd[u];
    if (ta[u].size() != tb[v].size()) return false;
    for (const auto& [color, ua] : ta[u]) {
      auto it = tb[v].find(color);
      if (it == tb[v].end()) return false;
      const int vb = it->second;
      if (fwd[ua] < 0 && bwd[vb] < 0) {
        fwd[ua] = vb;
        bwd[vb] = ua;
        q.push(ua);
      } else if (fwd[ua] != vb || bwd[vb] != ua) {
        return false;
      }
    }
  }
  for (int u = 0; u < V; ++u)
    if (fwd[u] < 0) return false;
  return true;
}

std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> weight_multiplicities(const CrystalGraph& g) {
  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> m;
  for (const auto& v : g.nodes) m[{v.depth, v.cwt, v.k}] += 1;
  return m;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

}  // namespace

std::string export_dot(const CrystalGraph& g) {
  std::string s = "digraph crystal {\n  rankdir=TB;\n";
  for (const auto& v : g.nodes) s += "  " + std::to_string(v.id) + " [label=\"" + dot_escape(v.label) + "\"];\n";
  for (const auto& e : g.edges)
    s += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + " [label=\"" + std::to_string(e.color) +
         "\"];\n";
  return s + "}\n";
}

std::string export_json(const CrystalGraph& g) {
  ordered_json j;
  j["algebra"] = {{"n", g.n}, {"level", g.level}};
  j["lambda"] = g.lambda;
  j["nodes"] = ordered_json::array();
  for (const auto& v : g.nodes)
    j["nodes"].push_back({{"id", v.id}, {"depth", v.depth}, {"label", v.label}, {"cwt", v.cwt}, {"k", v.k}});
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"color", e.color}});
  j["root"] = g.root;
  return j.dump(1) + "\n";
}

CrystalGraph graph_from_json(const std::string& text) {
  CrystalGraph g;
  try {
    auto j = ordered_json::parse(text);
    g.n = j.at("algebra").at("n").get<int>();
    g.level = j.at("algebra").at("level").get<int>();
    g.lambda = j.at("lambda").get<std::vector<int>>();
    for (const auto& v : j.at("nodes"))
      g.nodes.push_back({v.at("id").get<int>(), v.at("depth").get<int>(), v.at("label").get<std::string>(),
                         v.at("cwt").get<std::vector<int>>(), v.at("k").get<std::vector<int>>()});
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), e.at("color").get<int>()});
    g.root = j.at("root").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad graph json: ") + e.what());
  }
  return g;
}

}  // namespace dncrystal
