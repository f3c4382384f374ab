#include "dncrystal/slice_crystal.hpp"

#include <algorithm>
#include <tuple>

namespace dncrystal {

int SegmentCounts::level() const {
  int s = 0;
  for (int v : y) s += v;
  for (int v : yb) s += v;
  for (int v : ystar) s += 2 * v;
  return s;
}

SliceClass canonicalize(const Slice& c) {
  if (c.layers.empty()) throw DomainError("empty slice");
  const int P = c.period();
  Slice cur = c;
  Slice best;
  bool have = false;
  for (int r = 0; r < c.level(); ++r) {
    const int t0 = cur.layers.front().t;
    const int q = t0 >= 0 ? t0 / P : -((-t0 + P - 1) / P);
    Slice cand = slice_shift(cur, -q);
    if (!have || cand.layers < best.layers) {
      best = cand;
      have = true;
    }
    cur = slice_plus_delta(cur);
  }
  return SliceClass{best};
}

SegmentCounts decompose(const Slice& c) {
  const int n = c.n;
  const int P = c.period();
  SegmentCounts out(n);
  std::vector<int> t_sup(n, 0), t_cov(n, 0);
  int hw_low = 0, hw_high = 0;
  for (const auto& L : c.layers) {
    if (!layer_well_formed(n, c.pattern, L)) throw IntegrityError("malformed layer in " + describe(c));
    const int r = L.t % P;
    const Cell cell = c.cell(L.t);
    switch (L.s) {
      case LayerState::Empty:
        if (r == 0)
          out.yb[2] += 1;
        else if (r <= n - 2)
          out.y[r + 1] += 1;
        else
          out.yb[2 * n - 2 - r] += 1;
        break;
      case LayerState::HalfSlab:
        if (cell.role == Role::Supporting)
          t_sup[cell.color] += 1;
        else
          t_cov[cell.color] += 1;
        break;
      case LayerState::TriLower:
      case LayerState::TriUpper: {
        const int col = triangle_color(cell, L.s);
        if (col == 0) out.y[1] += 1;
        else if (col == 1) out.yb[1] += 1;
        else if (col == n - 1) out.y[n] += 1;
        else out.yb[n] += 1;
        break;
      }
      case LayerState::HalfWhole:
        (cell.kind == CellKind::DualLow ? hw_low : hw_high) += 1;
        break;
    }
  }
  for (int i = 2; i <= n - 2; ++i) {
    if (t_sup[i] != t_cov[i])
      throw IntegrityError("unbalanced broken " + std::to_string(i) + "-halves in " + describe(c));
    out.ystar[i] = t_sup[i];
  }
  if (hw_low % 2 || hw_high % 2) throw IntegrityError("unpaired dual half in " + describe(c));
  out.ystar[1] = hw_low / 2;
  out.ystar[n - 1] = hw_high / 2;
  for (int i = 1; i <= n; ++i)
    if (out.y[i] && out.yb[i]) throw IntegrityError("segments s_i and sbar_i coexist in " + describe(c));
  return out;
}

SegmentCounts decompose(const SliceClass& c) { return decompose(c.rep); }

Slice psi_window(const AlgebraParams& p, const CoordElement& b, Pattern pattern) {
  if (!is_valid(p, b)) throw DomainError("not an element of B^l: " + b.str());
  const int n = p.n;
  std::vector<int> xs(n + 1), xbs(n + 1), star(n, 0);
  for (int i = 1; i <= n - 1; ++i) {
    star[i] = std::min(b.x(i), b.xb(i));
    xs[i] = b.x(i) - star[i];
    xbs[i] = b.xb(i) - star[i];
  }
  xs[n] = b.x(n);
  xbs[n] = b.xb(n);

  // (volume, tie rank, layer); at a dual half level receivers < lone < donors
  std::vector<std::tuple<int, int, Layer>> items;
  auto put = [&](int count, int t, LayerState s, int rank) {
    for (int k = 0; k < count; ++k) items.push_back({Layer{t, s}.volume(), rank, Layer{t, s}});
  };
  const Cell low = cell_at(n, pattern, 0);
  const Cell high = cell_at(n, pattern, n - 2);
  put(xs[1], 0, triangle_for(low, 0), 1);
  put(xbs[1], 0, triangle_for(low, 1), 1);
  put(xs[n], n - 2, triangle_for(high, n - 1), 1);
  put(xbs[n], n - 2, triangle_for(high, n), 1);
  for (int i = 2; i <= n - 1; ++i) {
    put(xs[i], i - 1, LayerState::Empty, 0);
    put(xbs[i], i == 2 ? 0 : 2 * n - 2 - i, LayerState::Empty, 0);
  }
  for (int i = 2; i <= n - 2; ++i) {
    put(star[i], i - 1, LayerState::HalfSlab, 0);
    put(star[i], 2 * n - 3 - i, LayerState::HalfSlab, 0);
  }
  put(star[1], 0, LayerState::HalfWhole, 0);
  put(star[1], 0, LayerState::HalfWhole, 2);
  put(star[n - 1], n - 2, LayerState::HalfWhole, 0);
  put(star[n - 1], n - 2, LayerState::HalfWhole, 2);

  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b2) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b2), std::get<1>(b2));
  });
  Slice c;
  c.n = n;
  c.pattern = pattern;
  for (const auto& it : items) c.layers.push_back(std::get<2>(it));
  return c;
}

SliceClass psi(const AlgebraParams& p, const CoordElement& b, Pattern pattern) {
  return canonicalize(psi_window(p, b, pattern));
}

CoordElement phi_map(const AlgebraParams& p, const Slice& c) {
  if (c.n != p.n) throw DomainError("rank mismatch");
  const SegmentCounts s = decompose(c);
  const int n = p.n;
  CoordElement b(n);
  for (int i = 1; i <= n - 1; ++i) {
    b.x(i) = s.y[i] + s.ystar[i];
    b.xb(i) = s.yb[i] + s.ystar[i];
  }
  b.x(n) = s.y[n];
  b.xb(n) = s.yb[n];
  return b;
}

CoordElement phi_map(const AlgebraParams& p, const SliceClass& c) { return phi_map(p, c.rep); }

namespace {

struct Spot {
  int j;
  int h;
};

// lowest height, then rear-most
int pick_low(const std::vector<Spot>& v) {
  int best = -1, bh = 0;
  for (const auto& s : v)
    if (best < 0 || s.h < bh || (s.h == bh && s.j > best)) {
      best = s.j;
      bh = s.h;
    }
  return best;
}

// highest height, then fore-most
int pick_high(const std::vector<Spot>& v) {
  int best = -1, bh = 0;
  for (const auto& s : v)
    if (best < 0 || s.h > bh || (s.h == bh && s.j < best)) {
      best = s.j;
      bh = s.h;
    }
  return best;
}

struct MidSpots {
  std::vector<Spot> full_cov, full_sup, half_cov, half_sup;
};

MidSpots mid_slots(const Slice& c, int i) {
  MidSpots m;
  for (int j = 0; j < c.level(); ++j) {
    const Layer& L = c.layers[j];
    const Cell cell = c.cell(L.t);
    if (cell.dual() || cell.color != i) continue;
    const bool cov = cell.role == Role::Covering;
    if (L.s == LayerState::Empty) (cov ? m.full_cov : m.full_sup).push_back({j, L.t});
    if (L.s == LayerState::HalfSlab) (cov ? m.half_cov : m.half_sup).push_back({j, L.t});
  }
  return m;
}

MidSpots mid_blocks(const Slice& c, int i) {
  MidSpots m;
  for (int j = 0; j < c.level(); ++j) {
    const Layer& L = c.layers[j];
    if (L.s == LayerState::Empty && L.t > 0) {
      const Cell below = c.cell(L.t - 1);
      if (!below.dual() && below.color == i)
        (below.role == Role::Covering ? m.full_cov : m.full_sup).push_back({j, L.t - 1});
    }
    if (L.s == LayerState::HalfSlab) {
      const Cell cell = c.cell(L.t);
      if (cell.color == i) (cell.role == Role::Covering ? m.half_cov : m.half_sup).push_back({j, L.t});
    }
  }
  return m;
}

std::optional<Slice> mid_f(int i, const Slice& c) {
  Slice out = c;
  auto fill_half = [&](int j) {
    Layer& L = out.layers[j];
    if (L.s == LayerState::Empty)
      L.s = LayerState::HalfSlab;
    else
      L = Layer{L.t + 1, LayerState::Empty};
  };
  const MidSpots m = mid_slots(c, i);
  if (!m.full_cov.empty() && !m.full_sup.empty()) {
    fill_half(pick_low(m.full_cov));
    fill_half(pick_low(m.full_sup));
    return out;
  }
  if (!m.full_cov.empty() || !m.full_sup.empty()) {
    const bool cov = !m.full_cov.empty();
    fill_half(pick_low(cov ? m.full_cov : m.full_sup));
    const MidSpots again = mid_slots(out, i);
    fill_half(pick_low(cov ? again.half_cov : again.half_sup));
    return out;
  }
  if (!m.half_cov.empty() || !m.half_sup.empty()) {
    if (m.half_cov.size() != m.half_sup.size())
      throw IntegrityError("unequal covering and supporting half-slots for color " + std::to_string(i) + " in " +
                           describe(c));
    fill_half(pick_low(m.half_cov));
    fill_half(pick_low(m.half_sup));
    return out;
  }
  return std::nullopt;
}

std::optional<Slice> mid_e(int i, const Slice& c) {
  Slice out = c;
  auto take_half = [&](int j) {
    Layer& L = out.layers[j];
    if (L.s == LayerState::Empty)
      L = Layer{L.t - 1, LayerState::HalfSlab};
    else
      L.s = LayerState::Empty;
  };
  const MidSpots m = mid_blocks(c, i);
  if (!m.full_cov.empty() && !m.full_sup.empty()) {
    take_half(pick_high(m.full_cov));
    take_half(pick_high(m.full_sup));
    return out;
  }
  if (!m.full_cov.empty() || !m.full_sup.empty()) {
    const bool cov = !m.full_cov.empty();
    take_half(pick_high(cov ? m.full_cov : m.full_sup));
    const MidSpots again = mid_blocks(out, i);
    take_half(pick_high(cov ? again.half_cov : again.half_sup));
    return out;
  }
  if (!m.half_cov.empty() || !m.half_sup.empty()) {
    if (m.half_cov.size() != m.half_sup.size())
      throw IntegrityError("unequal covering and supporting half-blocks for color " + std::to_string(i) + " in " +
                           describe(c));
    take_half(pick_high(m.half_cov));
    take_half(pick_high(m.half_sup));
    return out;
  }
  return std::nullopt;
}

CellKind end_kind(int i) { return i <= 1 ? CellKind::DualLow : CellKind::DualHigh; }

std::optional<Slice> end_f(int i, const Slice& c) {
  Slice u = unsplit_duals(c);
  const CellKind kind = end_kind(i);
  std::vector<Spot> slots;
  for (int j = 0; j < u.level(); ++j) {
    const Layer& L = u.layers[j];
    const Cell cell = u.cell(L.t);
    if (cell.kind != kind) continue;
    if (L.s == LayerState::Empty || (L.triangle() && triangle_color(cell, L.s) != i)) slots.push_back({j, L.t});
  }
  if (slots.empty()) return std::nullopt;
  const int j = pick_low(slots);
  auto r = add_block(c.n, c.pattern, u.layers[j], i);
  if (!r) throw IntegrityError("end-color slot rejected its block");
  u.layers[j] = *r;
  return split_all(u);
}

std::optional<Slice> end_e(int i, const Slice& c) {
  Slice u = unsplit_duals(c);
  const CellKind kind = end_kind(i);
  std::vector<Spot> blocks;
  for (int j = 0; j < u.level(); ++j) {
    const Layer& L = u.layers[j];
    if (L.triangle()) {
      const Cell cell = u.cell(L.t);
      if (cell.kind == kind && triangle_color(cell, L.s) == i) blocks.push_back({j, L.t});
    } else if (L.s == LayerState::Empty && L.t > 0 && u.cell(L.t - 1).kind == kind) {
      blocks.push_back({j, L.t - 1});
    }
  }
  if (blocks.empty()) return std::nullopt;
  const int j = pick_high(blocks);
  auto r = remove_block(c.n, c.pattern, u.layers[j], i);
  if (!r) throw IntegrityError("end-color block could not be removed");
  u.layers[j] = *r;
  return split_all(u);
}

bool end_color(int n, int i) { return i <= 1 || i >= n - 1; }

}  // namespace

std::optional<Slice> slice_f_concrete(int i, const Slice& c) {
  if (i < 0 || i > c.n) throw DomainError("color out of range");
  return end_color(c.n, i) ? end_f(i, c) : mid_f(i, c);
}

std::optional<Slice> slice_e_concrete(int i, const Slice& c) {
  if (i < 0 || i > c.n) throw DomainError("color out of range");
  return end_color(c.n, i) ? end_e(i, c) : mid_e(i, c);
}

// Operators on a class act on a representative lifted by one cycle, so that
// blocks below the canonical position are reachable.
std::optional<SliceClass> slice_f(int i, const SliceClass& c) {
  auto r = slice_f_concrete(i, slice_shift(c.rep, 1));
  if (!r) return std::nullopt;
  return canonicalize(*r);
}

std::optional<SliceClass> slice_e(int i, const SliceClass& c) {
  auto r = slice_e_concrete(i, slice_shift(c.rep, 1));
  if (!r) return std::nullopt;
  return canonicalize(*r);
}

std::optional<SliceClass> slice_f_transport(const AlgebraParams& p, int i, const SliceClass& c) {
  auto b = coord_f(p, i, phi_map(p, c));
  if (!b) return std::nullopt;
  return psi(p, *b, c.rep.pattern);
}

std::optional<SliceClass> slice_e_transport(const AlgebraParams& p, int i, const SliceClass& c) {
  auto b = coord_e(p, i, phi_map(p, c));
  if (!b) return std::nullopt;
  return psi(p, *b, c.rep.pattern);
}

namespace {

template <class Op>
int string_length(int i, const SliceClass& c, Op op) {
  const int guard = c.rep.level() * (2 * c.rep.period() + 2);
  SliceClass cur = c;
  for (int k = 0; k <= guard; ++k) {
    auto r = op(i, cur);
    if (!r) return k;
    cur = *r;
  }
  throw IntegrityError("operator string exceeded its bound on " + describe(c.rep));
}

}  // namespace

int slice_phi(int i, const SliceClass& c) {
  return string_length(i, c, [](int k, const SliceClass& x) { return slice_f(k, x); });
}
int slice_eps(int i, const SliceClass& c) {
  return string_length(i, c, [](int k, const SliceClass& x) { return slice_e(k, x); });
}
int slice_phi(int i, const Slice& c) { return slice_phi(i, canonicalize(c)); }
int slice_eps(int i, const Slice& c) { return slice_eps(i, canonicalize(c)); }

ClassicalWeight slice_cwt(const SliceClass& c) {
  ClassicalWeight w(c.rep.n);
  for (int i = 0; i <= c.rep.n; ++i) w[i] = slice_phi(i, c) - slice_eps(i, c);
  return w;
}

}  // namespace dncrystal
