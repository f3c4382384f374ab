#include "dncrystal/io.hpp"

#include <json.hpp>

namespace dncrystal {

using nlohmann::json;

namespace {

std::vector<int> k_json(const BlockCount& k) { return k.wholes(); }

BlockCount k_from(const std::vector<int>& v) {
  BlockCount k(static_cast<int>(v.size()) - 1);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw DomainError("negative block count");
    k.halves[i] = 2 * v[i];
  }
  return k;
}

}  // namespace

std::string wall_to_json(const Wall& w) {
  json j;
  j["lambda"] = w.ground->lambda().coeffs;
  j["columns"] = json::array();
  for (const auto& c : w.prefix) {
    json col = json::array();
    for (const auto& L : c.layers) col.push_back(json::array({L.t, state_code(L.s)}));
    j["columns"].push_back(col);
  }
  j["k"] = k_json(w.k);
  return j.dump();
}

Wall wall_from_json(const std::string& text, std::shared_ptr<const GroundWall> g) {
  try {
    auto j = json::parse(text);
    ClassicalWeight lambda(j.at("lambda").get<std::vector<int>>());
    const int n = lambda.size() - 1;
    if (!g) g = std::make_shared<GroundWall>(n, lambda);
    if (g->lambda() != lambda) throw DomainError("wall lambda does not match the ground wall");
    Wall w = ground_wall(g);
    const auto& cols = j.at("columns");
    for (size_t k = 0; k < cols.size(); ++k) {
      Slice c;
      c.n = n;
      c.pattern = column_pattern(static_cast<int>(k));
      for (const auto& L : cols[k]) c.layers.push_back(Layer{L.at(0).get<int>(), state_from_code(L.at(1).get<std::string>())});
      if (c.level() != g->level()) throw DomainError("column has the wrong number of layers");
      for (const auto& L : c.layers)
        if (!layer_well_formed(n, c.pattern, L)) throw DomainError("malformed layer in column " + std::to_string(k));
      w.prefix.push_back(c);
    }
    if (j.contains("k")) w.k = k_from(j.at("k").get<std::vector<int>>());
    if (w.k.size() != n + 1) throw DomainError("k must have n+1 entries");
    w.normalize();
    return w;
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad wall json: ") + e.what());
  }
}

std::string path_to_json(const Path& p) {
  json j;
  j["lambda"] = p.ground->lambda().coeffs;
  j["components"] = json::array();
  for (const auto& b : p.prefix) j["components"].push_back(b.str());
  if (p.k) j["k"] = k_json(*p.k);
  return j.dump();
}

Path path_from_json(const std::string& text, std::shared_ptr<const GroundPath> g) {
  try {
    auto j = json::parse(text);
    ClassicalWeight lambda(j.at("lambda").get<std::vector<int>>());
    const int n = lambda.size() - 1;
    if (!g) g = std::make_shared<GroundPath>(n, lambda);
    Path p;
    p.ground = g;
    for (const auto& c : j.at("components")) {
      CoordElement b = CoordElement::parse(c.get<std::string>());
      if (!is_valid(g->params(), b)) throw DomainError("component not in B^l: " + b.str());
      p.prefix.push_back(b);
    }
    if (j.contains("k")) p.k = k_from(j.at("k").get<std::vector<int>>());
    p.normalize();
    return p;
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad path json: ") + e.what());
  }
}

Realization<Wall> wall_realization(int n) {
  Realization<Wall> r;
  r.colors = n + 1;
  r.f = [](int i, const Wall& w) { return wall_f(i, w); };
  r.key = [](const Wall& w) { return wall_to_json(w); };
  r.describe = [](const Wall& w) { return describe(w); };
  r.cwt = [](const Wall& w) { return wall_cwt(w).coeffs; };
  r.kvec = [](const Wall& w) { return w.k.wholes(); };
  return r;
}

Realization<Path> path_realization(int n) {
  Realization<Path> r;
  r.colors = n + 1;
  r.f = [](int i, const Path& p) { return path_f(i, p); };
  r.key = [](const Path& p) { return path_to_json(p); };
  r.describe = [](const Path& p) { return describe(p); };
  r.cwt = [](const Path& p) { return path_cwt(p).coeffs; };
  r.kvec = [](const Path& p) { return path_wt(p).second.wholes(); };
  return r;
}

CrystalGraph perfect_crystal_graph(const AlgebraParams& p, PerfectRealization which) {
  CrystalGraph g;
  g.n = p.n;
  g.level = p.l;
  const auto elems = enumerate_B(p);
  std::vector<int> zero(p.n + 1, 0);
  if (which == PerfectRealization::Coords) {
    for (size_t id = 0; id < elems.size(); ++id)
      g.nodes.push_back({static_cast<int>(id), 0, elems[id].str(), coord_cwt(p, elems[id]).coeffs, zero});
    for (size_t id = 0; id < elems.size(); ++id)
      for (int i = 0; i <= p.n; ++i)
        if (auto b = coord_f(p, i, elems[id])) {
          auto to = std::lower_bound(elems.begin(), elems.end(), *b) - elems.begin();
          g.edges.push_back({static_cast<int>(id), static_cast<int>(to), i});
        }
    return g;
  }
  std::vector<SliceClass> classes;
  for (const auto& b : elems) classes.push_back(psi(p, b));
  std::map<SliceClass, int> index;
  for (size_t id = 0; id < classes.size(); ++id) {
    if (!index.emplace(classes[id], static_cast<int>(id)).second) throw IntegrityError("psi is not injective");
    g.nodes.push_back({static_cast<int>(id), 0, describe(classes[id].rep), slice_cwt(classes[id]).coeffs, zero});
  }
  for (size_t id = 0; id < classes.size(); ++id)
    for (int i = 0; i <= p.n; ++i)
      if (auto c = slice_f(i, classes[id])) {
        auto it = index.find(*c);
        if (it == index.end()) throw IntegrityError("slice operator left the image of psi");
        g.edges.push_back({static_cast<int>(id), it->second, i});
      }
  return g;
}

}  // namespace dncrystal
