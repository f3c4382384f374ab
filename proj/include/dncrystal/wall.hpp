#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "dncrystal/path_model.hpp"
#include "dncrystal/slice_crystal.hpp"

namespace dncrystal {

/// Column k uses pattern A when k is even and B when odd.
Pattern column_pattern(int k);

/// Ground-state wall data: ground path plus positioned ground columns.
class GroundWall {
 public:
  GroundWall(int n, const ClassicalWeight& lambda);

  const GroundPath& path() const { return *path_; }
  std::shared_ptr<const GroundPath> path_ptr() const { return path_; }
  const ClassicalWeight& lambda() const { return path_->lambda(); }
  int n() const { return path_->n(); }
  int level() const { return path_->level(); }
  const Slice& column(int k) const;
  /// phi_i of ground column k, computed geometrically.
  int column_phi(int i, int k) const;

 private:
  std::shared_ptr<const GroundPath> path_;
  std::vector<Slice> cols_;   // one per distinct (ground element, parity)
  std::vector<std::vector<int>> phi_;
  int period_ = 1;
  int start_ = 0;
  int slot(int k) const;
};

struct Wall {
  std::shared_ptr<const GroundWall> ground;
  std::vector<Slice> prefix;  // columns 0..K-1, column 0 right-most
  BlockCount k;

  int K() const { return static_cast<int>(prefix.size()); }
  const Slice& column(int j) const { return j < K() ? prefix[j] : ground->column(j); }
  /// Drops trailing prefix columns equal to ground columns.
  void normalize();
  /// Makes columns 0..j explicit.
  void materialize(int j);

  friend bool operator==(const Wall& a, const Wall& b) {
    return a.ground->lambda() == b.ground->lambda() && a.prefix == b.prefix && a.k == b.k;
  }
};

const Slice& ground_column(const GroundWall& g, int k);
const CoordElement& ground_path_element(const GroundWall& g, int k);
Wall ground_wall(std::shared_ptr<const GroundWall> g);

/// Interlocking test for one adjacent pair (left = column k+1, right = column k).
bool columns_interlock(const Slice& left, const Slice& right);
bool is_valid_wall(const Wall& w);
bool is_proper(const Wall& w);
bool removable_delta(const Wall& w, int k);
bool is_reduced(const Wall& w);
Wall reduce(const Wall& w);

Signature i_signature(const Wall& w, int i);
/// Same signature with `extra` ground columns made explicit; must agree with i_signature.
Signature i_signature_extended(const Wall& w, int i, int extra);
std::optional<Wall> wall_f(int i, const Wall& w);
std::optional<Wall> wall_e(int i, const Wall& w);
int wall_phi(int i, const Wall& w);
int wall_eps(int i, const Wall& w);
ClassicalWeight wall_cwt(const Wall& w);
std::pair<ClassicalWeight, BlockCount> wall_wt(const Wall& w);

Path phi_big(const Wall& w);
Wall phi_big_inv(const Path& p, std::shared_ptr<const GroundWall> g);

std::string describe(const Wall& w);
std::string render_ascii(const Wall& w, int extra_ground_columns = 2);

}  // namespace dncrystal
