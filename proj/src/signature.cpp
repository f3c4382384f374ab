#include "dncrystal/signature.hpp"

namespace dncrystal {

Signature reduce_signature(const std::vector<ColumnSymbols>& columns) {
  Signature s;
  std::vector<int> open_zeros;
  for (const auto& c : columns) {
    for (int k = 0; k < c.eps; ++k) {
      if (!open_zeros.empty())
        open_zeros.pop_back();
      else
        s.one_positions.push_back(c.column);
    }
    for (int k = 0; k < c.phi; ++k) open_zeros.push_back(c.column);
  }
  s.zero_positions = std::move(open_zeros);
  s.ones = static_cast<int>(s.one_positions.size());
  s.zeros = static_cast<int>(s.zero_positions.size());
  return s;
}

Signature tail_signature(int K, int tail_phi, const std::function<std::pair<int, int>(int)>& eps_phi) {
  std::vector<ColumnSymbols> cols;
  cols.push_back({K, 0, tail_phi});
  for (int k = K - 1; k >= 0; --k) {
    auto [e, f] = eps_phi(k);
    cols.push_back({k, e, f});
  }
  return reduce_signature(cols);
}

}  // namespace dncrystal
