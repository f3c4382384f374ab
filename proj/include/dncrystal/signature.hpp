#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace dncrystal {

/// Per-column symbols: eps ones followed by phi zeros.
struct ColumnSymbols {
  int column = 0;
  int eps = 0;
  int phi = 0;
};

/// Surviving symbols after (0,1)-cancellation; reads 1...10...0 left to right.
struct Signature {
  int ones = 0;
  int zeros = 0;
  std::vector<int> one_positions;   // left to right
  std::vector<int> zero_positions;  // left to right

  bool has_zero() const { return zeros > 0; }
  bool has_one() const { return ones > 0; }
  int leftmost_zero() const { return zero_positions.front(); }
  int rightmost_one() const { return one_positions.back(); }
};

/// Columns listed left to right.
Signature reduce_signature(const std::vector<ColumnSymbols>& columns);

/// Semi-infinite tensor product whose columns k >= K are ground. The ground
/// tail telescopes to tail_phi zeros at column K; columns K-1..0 are explicit.
Signature tail_signature(int K, int tail_phi, const std::function<std::pair<int, int>(int)>& eps_phi);

}  // namespace dncrystal
