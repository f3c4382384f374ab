#include "dncrystal/wall.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dncrystal {

Pattern column_pattern(int k) { return k % 2 == 0 ? Pattern::A : Pattern::B; }

GroundWall::GroundWall(int n, const ClassicalWeight& lambda)
    : path_(std::make_shared<GroundPath>(n, lambda)) {
  start_ = path_->cycle_start();
  period_ = std::lcm(path_->cycle_length(), 2);
  for (int k = 0; k < start_ + period_; ++k) {
    cols_.push_back(psi_window(path_->params(), path_->element(k), column_pattern(k)));
    std::vector<int> ph;
    for (int i = 0; i <= n; ++i) ph.push_back(slice_phi(i, cols_.back()));
    phi_.push_back(ph);
  }
}

int GroundWall::slot(int k) const {
  if (k < 0) throw DomainError("negative column index");
  if (k < static_cast<int>(cols_.size())) return k;
  return start_ + (k - start_) % period_;
}

const Slice& GroundWall::column(int k) const { return cols_[slot(k)]; }
int GroundWall::column_phi(int i, int k) const { return phi_[slot(k)][i]; }

void Wall::normalize() {
  while (!prefix.empty() && prefix.back() == ground->column(K() - 1)) prefix.pop_back();
}

void Wall::materialize(int j) {
  while (K() <= j) prefix.push_back(ground->column(K()));
}

const Slice& ground_column(const GroundWall& g, int k) { return g.column(k); }
const CoordElement& ground_path_element(const GroundWall& g, int k) { return g.path().element(k); }

Wall ground_wall(std::shared_ptr<const GroundWall> g) {
  Wall w;
  w.k = BlockCount(g->n());
  w.ground = std::move(g);
  return w;
}

bool columns_interlock(const Slice& left, const Slice& right) {
  if (left.level() != right.level()) return false;
  const auto rl = half_whole_roles(left);
  const auto rr = half_whole_roles(right);
  for (int m = 0; m < left.level(); ++m) {
    const Layer& a = left.layers[m];
    const Layer& b = right.layers[m];
    if (a.t != b.t) {
      if (a.t > b.t) return false;
      continue;
    }
    if (a.s == LayerState::Empty) continue;
    if (b.s == LayerState::Empty) return false;
    if (a.triangle() && b.triangle()) {
      if (a.s != b.s) return false;
    } else if (a.triangle() && b.s == LayerState::HalfWhole) {
      if (rr[m] != 2) return false;  // only a lower dual half may sit beside a half-depth block
    } else if (a.s == LayerState::HalfWhole && b.triangle()) {
      if (rl[m] != 1) return false;  // only an upper dual half may stand left of one
    }
  }
  return true;
}

namespace {

bool column_ok(const Slice& c) {
  for (const auto& L : c.layers)
    if (!layer_well_formed(c.n, c.pattern, L)) return false;
  return volume_chain(c) && !splittable(c);
}

bool proper_columns(const std::vector<const Slice*>& cols) {
  if (cols.empty()) return true;
  const int l = cols.front()->level();
  for (int m = 0; m < l; ++m) {
    std::set<int> heights;
    for (const Slice* c : cols) {
      const Layer& L = c->layers[m];
      if (L.s != LayerState::Empty || L.t == 0) continue;
      if (!heights.insert(L.t).second) return false;
    }
  }
  return true;
}

Signature raw_signature(const Wall& w, int i) {
  const int K = w.K();
  return tail_signature(K, w.ground->column_phi(i, K), [&](int k) {
    return std::pair<int, int>{slice_eps(i, w.prefix[k]), slice_phi(i, w.prefix[k])};
  });
}

}  // namespace

bool is_valid_wall(const Wall& w) {
  for (const auto& c : w.prefix)
    if (!column_ok(c)) return false;
  for (int k = 0; k < w.K(); ++k)
    if (!columns_interlock(w.column(k + 1), w.column(k))) return false;
  return true;
}

bool is_proper(const Wall& w) {
  std::vector<const Slice*> cols;
  for (int k = 0; k <= w.K(); ++k) cols.push_back(&w.column(k));
  return proper_columns(cols);
}

bool removable_delta(const Wall& w, int k) {
  Wall t = w;
  t.materialize(k);
  auto m = slice_minus_delta(t.prefix[k]);
  if (!m) return false;
  t.prefix[k] = *m;
  return is_valid_wall(t) && is_proper(t);
}

bool is_reduced(const Wall& w) {
  for (int k = 0; k <= w.K(); ++k)
    if (removable_delta(w, k)) return false;
  return true;
}

Wall reduce(const Wall& w) {
  Wall cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = cur.K(); k >= 0; --k) {
      while (removable_delta(cur, k)) {
        cur.materialize(k);
        cur.prefix[k] = *slice_minus_delta(cur.prefix[k]);
        changed = true;
      }
    }
  }
  cur.normalize();
  return cur;
}

Signature i_signature(const Wall& w, int i) {
  if (i < 0 || i > w.ground->n()) throw DomainError("color out of range");
  return raw_signature(w, i);
}

Signature i_signature_extended(const Wall& w, int i, int extra) {
  Wall t = w;
  t.materialize(w.K() + extra - 1);
  return raw_signature(t, i);
}

namespace {

std::optional<Wall> act(int i, const Wall& w, bool lower) {
  const Signature s = i_signature(w, i);
  if (lower ? !s.has_zero() : !s.has_one()) return std::nullopt;
  const int col = lower ? s.leftmost_zero() : s.rightmost_one();
  Wall out = w;
  out.materialize(col);
  auto r = lower ? slice_f_concrete(i, out.prefix[col]) : slice_e_concrete(i, out.prefix[col]);
  if (!r) throw IntegrityError("signature selected column " + std::to_string(col) + " but the slice operator is undefined");
  out.prefix[col] = *r;
  out.k.add(i, lower ? 1 : -1);
  if (out.k.halves[i] < 0) throw IntegrityError("e_i removed more i-blocks than were added");
  out.normalize();
  if (!is_valid_wall(out)) throw IntegrityError("operator produced an invalid wall: " + describe(out));
  if (!is_proper(out)) throw IntegrityError("operator produced an improper wall: " + describe(out));
  if (is_reduced(w) && !is_reduced(out)) throw IntegrityError("operator broke reducedness: " + describe(out));
  return out;
}

}  // namespace

std::optional<Wall> wall_f(int i, const Wall& w) { return act(i, w, true); }
std::optional<Wall> wall_e(int i, const Wall& w) { return act(i, w, false); }
int wall_phi(int i, const Wall& w) { return i_signature(w, i).zeros; }
int wall_eps(int i, const Wall& w) { return i_signature(w, i).ones; }

ClassicalWeight wall_cwt(const Wall& w) {
  ClassicalWeight c(w.ground->n());
  for (int i = 0; i <= w.ground->n(); ++i) {
    const Signature s = i_signature(w, i);
    c[i] = s.zeros - s.ones;
  }
  return c;
}

std::pair<ClassicalWeight, BlockCount> wall_wt(const Wall& w) { return {w.ground->lambda(), w.k}; }

Path phi_big(const Wall& w) {
  Path p;
  p.ground = w.ground->path_ptr();
  for (const auto& c : w.prefix) p.prefix.push_back(phi_map(w.ground->path().params(), c));
  p.k = w.k;
  p.normalize();
  return p;
}

Wall phi_big_inv(const Path& p, std::shared_ptr<const GroundWall> g) {
  if (!p.k) throw UnsupportedInput("path has no recorded block counts");
  if (p.ground->lambda() != g->lambda()) throw DomainError("path and ground wall have different weights");
  const int K = p.K();
  const int guard = 4 * g->level() * (K + 2) + 8;
  std::vector<Slice> cols(K);
  for (int k = K - 1; k >= 0; --k) {
    Slice c = psi(g->path().params(), p.prefix[k], column_pattern(k)).rep;
    while (auto m = slice_minus_delta(c)) c = *m;
    const Slice& left = k + 1 < K ? cols[k + 1] : g->column(K);
    int steps = 0;
    while (true) {
      std::vector<const Slice*> placed{&c};
      for (int j = k + 1; j < K; ++j) placed.push_back(&cols[j]);
      placed.push_back(&g->column(K));
      if (columns_interlock(left, c) && proper_columns(placed)) break;
      if (++steps > guard) throw IntegrityError("could not position column " + std::to_string(k));
      c = slice_plus_delta(c);
    }
    cols[k] = c;
  }
  Wall w;
  w.ground = std::move(g);
  w.prefix = std::move(cols);
  w.k = *p.k;
  w = reduce(w);
  if (!is_valid_wall(w) || !is_proper(w)) throw IntegrityError("inverse map built an invalid wall");
  return w;
}

std::string describe(const Wall& w) {
  if (w.prefix.empty()) return "ground";
  std::string s;
  for (int k = w.K() - 1; k >= 0; --k) {
    s += describe(w.prefix[k]);
    if (k) s += " ";
  }
  return s;
}

std::string render_ascii(const Wall& w, int extra_ground_columns) {
  const int total = w.K() + extra_ground_columns;
  int top = 1;
  for (int k = 0; k < total; ++k)
    for (const auto& L : w.column(k).layers) top = std::max(top, 2 * L.t + 2);
  std::vector<std::string> lines(top);
  for (int k = total - 1; k >= 0; --k) {
    auto rows = render_rows(w.column(k), top);
    for (int r = 0; r < top; ++r) lines[r] += rows[r] + (k ? " " : "");
  }
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

}  // namespace dncrystal
