#pragma once

#include <string>
#include <vector>

#include "dncrystal/errors.hpp"

namespace dncrystal {

/// Rank n (>= 4) and level l (>= 1) of the perfect crystal.
struct AlgebraParams {
  int n = 4;
  int l = 1;

  AlgebraParams() = default;
  AlgebraParams(int n_, int l_);

  int colors() const { return n + 1; }
  /// Length of one cycle of the stacking pattern, 2n-4.
  int period() const { return 2 * n - 4; }
  void check_color(int i) const;
};

/// Coefficients of Lambda_0..Lambda_n.
struct ClassicalWeight {
  std::vector<int> coeffs;

  ClassicalWeight() = default;
  explicit ClassicalWeight(int n) : coeffs(n + 1, 0) {}
  explicit ClassicalWeight(std::vector<int> c) : coeffs(std::move(c)) {}

  int operator[](int i) const { return coeffs[i]; }
  int& operator[](int i) { return coeffs[i]; }
  int size() const { return static_cast<int>(coeffs.size()); }

  ClassicalWeight& operator+=(const ClassicalWeight& o);
  ClassicalWeight& operator-=(const ClassicalWeight& o);
  friend ClassicalWeight operator+(ClassicalWeight a, const ClassicalWeight& b) { return a += b; }
  friend ClassicalWeight operator-(ClassicalWeight a, const ClassicalWeight& b) { return a -= b; }
  friend ClassicalWeight operator*(int s, ClassicalWeight a) {
    for (int& c : a.coeffs) c *= s;
    return a;
  }
  friend bool operator==(const ClassicalWeight&, const ClassicalWeight&) = default;
  friend auto operator<=>(const ClassicalWeight&, const ClassicalWeight&) = default;

  bool dominant() const;
  std::string str() const;
};

/// Added i-blocks per color, kept in half units so transient halves are representable.
struct BlockCount {
  std::vector<int> halves;

  BlockCount() = default;
  explicit BlockCount(int n) : halves(n + 1, 0) {}

  void add(int i, int whole_blocks) { halves[i] += 2 * whole_blocks; }
  /// Whole number of i-blocks. Throws if the count is currently a half.
  int whole(int i) const;
  std::vector<int> wholes() const;
  int total() const;
  int size() const { return static_cast<int>(halves.size()); }

  friend bool operator==(const BlockCount&, const BlockCount&) = default;
  friend auto operator<=>(const BlockCount&, const BlockCount&) = default;
};

/// Generalized Cartan matrix entry a_ij of D_n^(1).
int cartan(const AlgebraParams& p, int i, int j);

/// cl(alpha_i) = sum_j a_ji Lambda_j.
ClassicalWeight classical_alpha(const AlgebraParams& p, int i);

/// a_0 + a_1 + 2(a_2 + ... + a_{n-2}) + a_{n-1} + a_n.
int level_of(const AlgebraParams& p, const ClassicalWeight& lambda);

/// Coefficient d_i of alpha_i in the null root.
int delta_coeff(const AlgebraParams& p, int i);

/// Lambda_i as a weight.
ClassicalWeight fundamental(int n, int i);

/// All dominant weights of level l.
std::vector<ClassicalWeight> dominant_weights(const AlgebraParams& p);

}  // namespace dncrystal
