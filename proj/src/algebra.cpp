#include "dncrystal/algebra.hpp"

#include <cstdlib>
#include <functional>

namespace dncrystal {

AlgebraParams::AlgebraParams(int n_, int l_) : n(n_), l(l_) {
  if (n < 4) throw DomainError("n must be at least 4, got " + std::to_string(n));
  if (l < 0) throw DomainError("level must be nonnegative, got " + std::to_string(l));
}

void AlgebraParams::check_color(int i) const {
  if (i < 0 || i > n) throw DomainError("color " + std::to_string(i) + " out of range 0.." + std::to_string(n));
}

ClassicalWeight& ClassicalWeight::operator+=(const ClassicalWeight& o) {
  if (o.coeffs.size() != coeffs.size()) throw DomainError("weight length mismatch");
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

ClassicalWeight& ClassicalWeight::operator-=(const ClassicalWeight& o) {
  if (o.coeffs.size() != coeffs.size()) throw DomainError("weight length mismatch");
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

bool ClassicalWeight::dominant() const {
  for (int c : coeffs)
    if (c < 0) return false;
  return true;
}

std::string ClassicalWeight::str() const {
  std::string s = "(";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + ")";
}

int BlockCount::whole(int i) const {
  if (halves[i] % 2 != 0) throw IntegrityError("block count of color " + std::to_string(i) + " is not whole");
  return halves[i] / 2;
}

std::vector<int> BlockCount::wholes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) out.push_back(whole(i));
  return out;
}

int BlockCount::total() const {
  int s = 0;
  for (int h : halves) s += h;
  return s / 2;
}

namespace {

bool adjacent(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return false;
  if (j == 2 && (i == 0 || i == 1)) return true;
  if (i >= 2 && i <= n - 3 && j == i + 1) return true;
  if (i == n - 2 && (j == n - 1 || j == n)) return true;
  return false;
}

}  // namespace

int cartan(const AlgebraParams& p, int i, int j) {
  p.check_color(i);
  p.check_color(j);
  if (i == j) return 2;
  return adjacent(p.n, i, j) ? -1 : 0;
}

ClassicalWeight classical_alpha(const AlgebraParams& p, int i) {
  p.check_color(i);
  ClassicalWeight w(p.n);
  for (int j = 0; j <= p.n; ++j) w[j] = cartan(p, j, i);
  return w;
}

int delta_coeff(const AlgebraParams& p, int i) {
  p.check_color(i);
  return (i <= 1 || i >= p.n - 1) ? 1 : 2;
}

int level_of(const AlgebraParams& p, const ClassicalWeight& lambda) {
  if (lambda.size() != p.n + 1) throw DomainError("weight must have n+1 coefficients");
  int s = 0;
  for (int i = 0; i <= p.n; ++i) s += delta_coeff(p, i) * lambda[i];
  return s;
}

ClassicalWeight fundamental(int n, int i) {
  ClassicalWeight w(n);
  w[i] = 1;
  return w;
}

std::vector<ClassicalWeight> dominant_weights(const AlgebraParams& p) {
  std::vector<ClassicalWeight> out;
  ClassicalWeight cur(p.n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > p.n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    int d = delta_coeff(p, i);
    for (int a = 0; a * d <= left; ++a) {
      cur[i] = a;
      rec(i + 1, left - a * d);
    }
    cur[i] = 0;
  };
  rec(0, p.l);
  return out;
}

}  // namespace dncrystal
