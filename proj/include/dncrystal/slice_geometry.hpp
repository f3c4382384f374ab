#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dncrystal/algebra.hpp"

namespace dncrystal {

/// The two stacking patterns; B swaps the triangle colors of both dual cells.
enum class Pattern { A, B };

enum class CellKind { DualLow, Single, DualHigh };
enum class Role { Supporting, Covering, Both };

struct Cell {
  CellKind kind = CellKind::DualLow;
  int m = 0;
  int color = -1;  // Single cells only
  int lower = -1;  // dual cells: color of the lower triangle
  int upper = -1;  // dual cells: color of the upper triangle
  Role role = Role::Both;

  bool dual() const { return kind != CellKind::Single; }
  bool holds(int c) const { return dual() ? (c == lower || c == upper) : c == color; }
};

Cell cell_at(int n, Pattern pattern, int m);

/// Partial content of the top cell of a layer.
enum class LayerState { Empty, HalfSlab, TriLower, TriUpper, HalfWhole };

/// Cells below t are full; cell t holds `s`.
struct Layer {
  int t = 0;
  LayerState s = LayerState::Empty;

  int volume() const { return 2 * t + (s == LayerState::Empty ? 0 : 1); }
  bool broken() const { return s == LayerState::HalfSlab || s == LayerState::HalfWhole; }
  bool triangle() const { return s == LayerState::TriLower || s == LayerState::TriUpper; }

  friend bool operator==(const Layer&, const Layer&) = default;
  friend auto operator<=>(const Layer&, const Layer&) = default;
};

/// Layers c_1..c_l, front (index 0) to rear.
struct Slice {
  int n = 4;
  Pattern pattern = Pattern::A;
  std::vector<Layer> layers;

  int level() const { return static_cast<int>(layers.size()); }
  int period() const { return 2 * n - 4; }
  Cell cell(int m) const { return cell_at(n, pattern, m); }

  friend bool operator==(const Slice&, const Slice&) = default;
  friend auto operator<=>(const Slice&, const Slice&) = default;
};

/// Split classes: the glued 0/1 block, a middle color, the glued (n-1)/n block.
struct SplitClass {
  enum Kind { ZO, Mid, NN } kind = ZO;
  int color = 0;  // middle color for Mid

  static SplitClass zo() { return {ZO, 0}; }
  static SplitClass nn() { return {NN, 0}; }
  static SplitClass mid(int c) { return {Mid, c}; }
  std::string name() const;
  friend bool operator==(const SplitClass&, const SplitClass&) = default;
};

/// zo, 2, ..., n-2, nn.
std::vector<SplitClass> split_priority(int n);

const char* state_code(LayerState s);
LayerState state_from_code(const std::string& code);

/// Triangle state that a block of dual color c occupies at the given dual cell.
LayerState triangle_for(const Cell& cell, int c);
/// Color of a triangle state at a dual cell.
int triangle_color(const Cell& cell, LayerState s);

std::optional<Layer> add_block(int n, Pattern pattern, const Layer& layer, int color);
std::optional<Layer> remove_block(int n, Pattern pattern, const Layer& layer, int color);

/// Layer-level structural check (broken halves only where the cell allows them).
bool layer_well_formed(int n, Pattern pattern, const Layer& layer);
/// Geometric containment for unbroken layers.
bool layer_contains(const Layer& inner, const Layer& outer);

bool is_preslice(const Slice& c);
bool volume_chain(const Slice& c);
bool is_slice(const Slice& c);

/// One split move of the class in the given orientation (mirror swaps covering and supporting).
std::optional<Slice> split_oriented(const Slice& c, SplitClass cls, bool mirror);
/// Def orientation first, then mirror.
std::optional<Slice> split(const Slice& c, SplitClass cls);
bool splittable(const Slice& c);
Slice split_all(const Slice& c);

/// Roles of HalfWhole layers: 0 none, 1 receiver (upper broken half), 2 donor (lower half).
std::vector<int> half_whole_roles(const Slice& c);
Slice unsplit_duals(const Slice& c);

Layer layer_plus_delta(int n, const Layer& layer);
Slice slice_plus_delta(const Slice& c);
std::optional<Slice> slice_minus_delta(const Slice& c);
/// Every layer shifted by k full cycles (k may be negative). Same as |k|*l rotations.
Slice slice_shift(const Slice& c, int cycles);

/// Text column per layer, rows of half-unit height, highest row first.
std::vector<std::string> render_rows(const Slice& c, int height_rows);
std::string render_ascii(const Slice& c);
std::string describe(const Slice& c);

}  // namespace dncrystal
