#include "dncrystal/slice_geometry.hpp"

#include <algorithm>
#include <set>

namespace dncrystal {

Cell cell_at(int n, Pattern pattern, int m) {
  if (m < 0) throw DomainError("negative cell index");
  const int P = 2 * n - 4;
  const int r = m % P;
  Cell c;
  c.m = m;
  const bool a = pattern == Pattern::A;
  if (r == 0) {
    c.kind = CellKind::DualLow;
    c.lower = a ? 0 : 1;
    c.upper = a ? 1 : 0;
    c.role = Role::Both;
  } else if (r == n - 2) {
    c.kind = CellKind::DualHigh;
    c.lower = a ? n - 1 : n;
    c.upper = a ? n : n - 1;
    c.role = Role::Both;
  } else if (r < n - 2) {
    c.kind = CellKind::Single;
    c.color = r + 1;
    c.role = Role::Supporting;
  } else {
    c.kind = CellKind::Single;
    c.color = 2 * n - 3 - r;
    c.role = Role::Covering;
  }
  return c;
}

std::string SplitClass::name() const {
  switch (kind) {
    case ZO: return "zo";
    case NN: return "nn";
    default: return std::to_string(color);
  }
}

std::vector<SplitClass> split_priority(int n) {
  std::vector<SplitClass> out{SplitClass::zo()};
  for (int c = 2; c <= n - 2; ++c) out.push_back(SplitClass::mid(c));
  out.push_back(SplitClass::nn());
  return out;
}

const char* state_code(LayerState s) {
  switch (s) {
    case LayerState::Empty: return "E";
    case LayerState::HalfSlab: return "HS";
    case LayerState::TriLower: return "TL";
    case LayerState::TriUpper: return "TU";
    case LayerState::HalfWhole: return "HW";
  }
  return "?";
}

LayerState state_from_code(const std::string& code) {
  if (code == "E") return LayerState::Empty;
  if (code == "HS") return LayerState::HalfSlab;
  if (code == "TL") return LayerState::TriLower;
  if (code == "TU") return LayerState::TriUpper;
  if (code == "HW") return LayerState::HalfWhole;
  throw DomainError("unknown layer state '" + code + "'");
}

LayerState triangle_for(const Cell& cell, int c) {
  if (!cell.dual()) throw DomainError("triangles only live in dual cells");
  if (c == cell.lower) return LayerState::TriLower;
  if (c == cell.upper) return LayerState::TriUpper;
  throw DomainError("color " + std::to_string(c) + " does not fit this dual cell");
}

int triangle_color(const Cell& cell, LayerState s) {
  if (s == LayerState::TriLower) return cell.lower;
  if (s == LayerState::TriUpper) return cell.upper;
  throw DomainError("not a triangle state");
}

std::optional<Layer> add_block(int n, Pattern pattern, const Layer& layer, int color) {
  const Cell cell = cell_at(n, pattern, layer.t);
  if (!cell.holds(color)) return std::nullopt;
  if (!cell.dual()) {
    if (layer.s != LayerState::Empty) return std::nullopt;
    return Layer{layer.t + 1, LayerState::Empty};
  }
  const LayerState tri = triangle_for(cell, color);
  if (layer.s == LayerState::Empty) return Layer{layer.t, tri};
  if (layer.triangle() && layer.s != tri) return Layer{layer.t + 1, LayerState::Empty};
  return std::nullopt;
}

std::optional<Layer> remove_block(int n, Pattern pattern, const Layer& layer, int color) {
  if (layer.triangle()) {
    const Cell cell = cell_at(n, pattern, layer.t);
    if (triangle_color(cell, layer.s) == color) return Layer{layer.t, LayerState::Empty};
    return std::nullopt;
  }
  if (layer.s != LayerState::Empty || layer.t == 0) return std::nullopt;
  const Cell below = cell_at(n, pattern, layer.t - 1);
  if (!below.holds(color)) return std::nullopt;
  if (!below.dual()) return Layer{layer.t - 1, LayerState::Empty};
  const LayerState removed = triangle_for(below, color);
  return Layer{layer.t - 1, removed == LayerState::TriLower ? LayerState::TriUpper : LayerState::TriLower};
}

bool layer_well_formed(int n, Pattern pattern, const Layer& layer) {
  if (layer.t < 0) return false;
  const Cell cell = cell_at(n, pattern, layer.t);
  switch (layer.s) {
    case LayerState::Empty: return true;
    case LayerState::HalfSlab: return !cell.dual();
    default: return cell.dual();
  }
}

bool layer_contains(const Layer& inner, const Layer& outer) {
  if (inner.t != outer.t) return inner.t < outer.t;
  if (inner.s == LayerState::Empty) return true;
  return inner.s == outer.s;
}

bool is_preslice(const Slice& c) {
  if (c.layers.empty()) return false;
  for (const auto& L : c.layers) {
    if (!layer_well_formed(c.n, c.pattern, L) || L.broken()) return false;
  }
  for (int j = 0; j + 1 < c.level(); ++j)
    if (!layer_contains(c.layers[j], c.layers[j + 1])) return false;
  return layer_contains(c.layers.back(), layer_plus_delta(c.n, c.layers.front()));
}

bool volume_chain(const Slice& c) {
  if (c.layers.empty()) return false;
  for (int j = 0; j + 1 < c.level(); ++j)
    if (c.layers[j].volume() > c.layers[j + 1].volume()) return false;
  return c.layers.back().volume() <= c.layers.front().volume() + 2 * c.period();
}

bool is_slice(const Slice& c) {
  for (const auto& L : c.layers)
    if (!layer_well_formed(c.n, c.pattern, L)) return false;
  return volume_chain(c) && !splittable(c);
}

namespace {

bool class_cell(const Cell& cell, SplitClass cls, Role role) {
  switch (cls.kind) {
    case SplitClass::ZO: return cell.kind == CellKind::DualLow;
    case SplitClass::NN: return cell.kind == CellKind::DualHigh;
    default: return cell.kind == CellKind::Single && cell.color == cls.color && cell.role == role;
  }
}

}  // namespace

std::optional<Slice> split_oriented(const Slice& c, SplitClass cls, bool mirror) {
  if (mirror && cls.kind != SplitClass::Mid) return std::nullopt;
  const Role donor_role = mirror ? Role::Supporting : Role::Covering;
  const Role recv_role = mirror ? Role::Covering : Role::Supporting;

  int donor = -1, donor_h = 0, recv = -1, recv_h = 0;
  std::set<int> donor_heights;
  for (int j = 0; j < c.level(); ++j) {
    const Layer& L = c.layers[j];
    if (L.s != LayerState::Empty) continue;
    if (L.t > 0 && class_cell(c.cell(L.t - 1), cls, donor_role)) {
      const int h = L.t - 1;
      donor_heights.insert(h);
      if (donor < 0 || h > donor_h) {
        donor = j;
        donor_h = h;
      }
    }
    if (class_cell(c.cell(L.t), cls, recv_role)) {
      const int h = L.t;
      if (recv < 0 || h <= recv_h) {
        recv = j;
        recv_h = h;
      }
    }
  }
  if (donor_heights.size() > 2) throw DomainError("more than two donor heights in split of class " + cls.name());
  if (donor < 0 || recv < 0) return std::nullopt;
  if (donor == recv) throw IntegrityError("split donor and receiver coincide");

  const LayerState half = cls.kind == SplitClass::Mid ? LayerState::HalfSlab : LayerState::HalfWhole;
  Slice out = c;
  out.layers[donor] = Layer{c.layers[donor].t - 1, half};
  out.layers[recv] = Layer{c.layers[recv].t, half};
  return out;
}

std::optional<Slice> split(const Slice& c, SplitClass cls) {
  if (auto r = split_oriented(c, cls, false)) return r;
  return split_oriented(c, cls, true);
}

bool splittable(const Slice& c) {
  for (auto cls : split_priority(c.n))
    if (split(c, cls)) return true;
  return false;
}

Slice split_all(const Slice& c) {
  Slice cur = c;
  const auto order = split_priority(c.n);
  // each move removes an Empty-topped donor, so the loop is bounded by the level
  for (int guard = 0; guard <= c.level(); ++guard) {
    bool moved = false;
    for (bool mirror : {false, true}) {
      for (auto cls : order) {
        if (auto r = split_oriented(cur, cls, mirror)) {
          cur = *r;
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (!moved) return cur;
  }
  throw IntegrityError("split_all did not terminate");
}

std::vector<int> half_whole_roles(const Slice& c) {
  std::vector<int> roles(c.level(), 0);
  const int twoP = 2 * c.period();
  for (CellKind kind : {CellKind::DualLow, CellKind::DualHigh}) {
    std::vector<int> idx;
    for (int j = 0; j < c.level(); ++j)
      if (c.layers[j].s == LayerState::HalfWhole && c.cell(c.layers[j].t).kind == kind) idx.push_back(j);
    if (idx.empty()) continue;
    if (idx.size() % 2 != 0) throw IntegrityError("odd number of broken dual halves");
    int top = 0;
    for (int j : idx) top = std::max(top, c.layers[j].volume());
    std::vector<std::pair<int, int>> order;
    for (int j : idx) order.push_back({(top - c.layers[j].volume()) / twoP, j});
    std::sort(order.begin(), order.end());
    const size_t half = order.size() / 2;
    for (size_t q = 0; q < order.size(); ++q) roles[order[q].second] = q < half ? 1 : 2;
  }
  return roles;
}

Slice unsplit_duals(const Slice& c) {
  const auto roles = half_whole_roles(c);
  Slice out = c;
  for (int j = 0; j < c.level(); ++j) {
    if (roles[j] == 1) out.layers[j] = Layer{c.layers[j].t, LayerState::Empty};
    if (roles[j] == 2) out.layers[j] = Layer{c.layers[j].t + 1, LayerState::Empty};
  }
  return out;
}

Layer layer_plus_delta(int n, const Layer& layer) { return Layer{layer.t + 2 * n - 4, layer.s}; }

Slice slice_plus_delta(const Slice& c) {
  Slice out = c;
  out.layers.erase(out.layers.begin());
  out.layers.push_back(layer_plus_delta(c.n, c.layers.front()));
  return out;
}

std::optional<Slice> slice_minus_delta(const Slice& c) {
  const Layer& last = c.layers.back();
  if (last.t < c.period()) return std::nullopt;
  Slice out = c;
  out.layers.pop_back();
  out.layers.insert(out.layers.begin(), Layer{last.t - c.period(), last.s});
  return out;
}

Slice slice_shift(const Slice& c, int cycles) {
  Slice out = c;
  for (auto& L : out.layers) L.t += cycles * c.period();
  return out;
}

std::vector<std::string> render_rows(const Slice& c, int height_rows) {
  std::vector<std::string> rows(height_rows, std::string(c.level(), '.'));
  for (int j = 0; j < c.level(); ++j) {
    const Layer& L = c.layers[j];
    const int col = c.level() - 1 - j;  // rear layer on the left
    for (int r = 0; r < height_rows; ++r) {
      char g = '.';
      if (r < 2 * L.t) {
        g = '#';
      } else if (r < 2 * L.t + 2) {
        switch (L.s) {
          case LayerState::HalfSlab:
          case LayerState::HalfWhole: g = r == 2 * L.t ? '-' : '.'; break;
          case LayerState::TriLower: g = '/'; break;
          case LayerState::TriUpper: g = '\\'; break;
          default: break;
        }
      }
      rows[height_rows - 1 - r][col] = g;
    }
  }
  return rows;
}

std::string render_ascii(const Slice& c) {
  int top = 1;
  for (const auto& L : c.layers) top = std::max(top, 2 * L.t + 2);
  std::string out;
  for (const auto& row : render_rows(c, top)) out += row + "\n";
  return out;
}

std::string describe(const Slice& c) {
  std::string s = c.pattern == Pattern::A ? "A[" : "B[";
  for (int j = 0; j < c.level(); ++j) {
    if (j) s += ",";
    s += std::to_string(c.layers[j].t) + state_code(c.layers[j].s);
  }
  return s + "]";
}

}  // namespace dncrystal
