#pragma once

#include <optional>
#include <vector>

#include "dncrystal/coord_crystal.hpp"
#include "dncrystal/slice_geometry.hpp"

namespace dncrystal {

/// A delta-equivalence class, held by its canonical representative.
struct SliceClass {
  Slice rep;

  friend bool operator==(const SliceClass&, const SliceClass&) = default;
  friend auto operator<=>(const SliceClass&, const SliceClass&) = default;
};

/// Segment multiplicities. y, ybar indexed 1..n; ystar indexed 1..n-1 where
/// index 1 counts zo pairs, n-1 counts nn pairs, 2..n-2 middle pairs.
struct SegmentCounts {
  std::vector<int> y, yb, ystar;

  explicit SegmentCounts(int n = 4) : y(n + 1, 0), yb(n + 1, 0), ystar(n, 0) {}
  int n() const { return static_cast<int>(y.size()) - 1; }
  int level() const;
  friend bool operator==(const SegmentCounts&, const SegmentCounts&) = default;
};

/// Smallest delta-shift, over all rotations, with c_1 in the first cycle.
SliceClass canonicalize(const Slice& c);

SegmentCounts decompose(const Slice& c);
SegmentCounts decompose(const SliceClass& c);

/// Layers of psi(b) in window order (volumes in [0, 2P)), before canonicalization.
Slice psi_window(const AlgebraParams& p, const CoordElement& b, Pattern pattern = Pattern::A);
SliceClass psi(const AlgebraParams& p, const CoordElement& b, Pattern pattern = Pattern::A);
CoordElement phi_map(const AlgebraParams& p, const SliceClass& c);
CoordElement phi_map(const AlgebraParams& p, const Slice& c);

/// Geometric operators on a concrete slice; delta position is preserved.
std::optional<Slice> slice_f_concrete(int i, const Slice& c);
std::optional<Slice> slice_e_concrete(int i, const Slice& c);

std::optional<SliceClass> slice_f(int i, const SliceClass& c);
std::optional<SliceClass> slice_e(int i, const SliceClass& c);
std::optional<SliceClass> slice_f_transport(const AlgebraParams& p, int i, const SliceClass& c);
std::optional<SliceClass> slice_e_transport(const AlgebraParams& p, int i, const SliceClass& c);

int slice_phi(int i, const SliceClass& c);
int slice_eps(int i, const SliceClass& c);
int slice_phi(int i, const Slice& c);
int slice_eps(int i, const Slice& c);
ClassicalWeight slice_cwt(const SliceClass& c);

}  // namespace dncrystal
