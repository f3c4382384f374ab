#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dncrystal/algebra.hpp"

namespace dncrystal {

/// (x_1,...,x_n | xbar_n,...,xbar_1). Storage is by index i = 1..n for both halves.
struct CoordElement {
  std::vector<int> xs;   // xs[i-1] = x_i
  std::vector<int> xbs;  // xbs[i-1] = xbar_i

  CoordElement() = default;
  explicit CoordElement(int n) : xs(n, 0), xbs(n, 0) {}
  /// Takes the tuple in printed order: x_1..x_n then xbar_n..xbar_1.
  static CoordElement from_printed(const std::vector<int>& x, const std::vector<int>& xbar_desc);

  int n() const { return static_cast<int>(xs.size()); }
  int x(int i) const { return xs[i - 1]; }
  int xb(int i) const { return xbs[i - 1]; }
  int& x(int i) { return xs[i - 1]; }
  int& xb(int i) { return xbs[i - 1]; }
  int level() const;

  /// Concatenated tuple in printed order.
  std::vector<int> printed() const;
  std::string str() const;
  static CoordElement parse(const std::string& text);

  friend bool operator==(const CoordElement&, const CoordElement&) = default;
  friend bool operator<(const CoordElement& a, const CoordElement& b) { return a.printed() < b.printed(); }
};

bool is_valid(const AlgebraParams& p, const CoordElement& b);

/// All of B^l, lexicographic in printed order.
std::vector<CoordElement> enumerate_B(const AlgebraParams& p);

std::optional<CoordElement> coord_f(const AlgebraParams& p, int i, const CoordElement& b);
std::optional<CoordElement> coord_e(const AlgebraParams& p, int i, const CoordElement& b);
int coord_phi(const AlgebraParams& p, int i, const CoordElement& b);
int coord_eps(const AlgebraParams& p, int i, const CoordElement& b);
std::vector<int> coord_phi_vector(const AlgebraParams& p, const CoordElement& b);
std::vector<int> coord_eps_vector(const AlgebraParams& p, const CoordElement& b);
ClassicalWeight coord_cwt(const AlgebraParams& p, const CoordElement& b);

/// The unique b with eps(b) = lambda. Throws IntegrityError if not unique.
CoordElement minimal_element(const AlgebraParams& p, const ClassicalWeight& lambda);
/// The unique b with phi(b) = lambda.
CoordElement maximal_element(const AlgebraParams& p, const ClassicalWeight& lambda);

}  // namespace dncrystal
