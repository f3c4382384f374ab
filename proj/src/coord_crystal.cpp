#include "dncrystal/coord_crystal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dncrystal {

namespace {

int pos(int v) { return v > 0 ? v : 0; }

void require_valid(const AlgebraParams& p, const CoordElement& b) {
  if (!is_valid(p, b)) throw DomainError("not an element of B^l: " + b.str());
}

}  // namespace

CoordElement CoordElement::from_printed(const std::vector<int>& x, const std::vector<int>& xbar_desc) {
  if (x.size() != xbar_desc.size()) throw DomainError("coordinate halves differ in length");
  CoordElement b;
  b.xs = x;
  b.xbs.assign(xbar_desc.rbegin(), xbar_desc.rend());
  return b;
}

int CoordElement::level() const {
  int s = 0;
  for (int v : xs) s += v;
  for (int v : xbs) s += v;
  return s;
}

std::vector<int> CoordElement::printed() const {
  std::vector<int> t = xs;
  t.insert(t.end(), xbs.rbegin(), xbs.rend());
  return t;
}

std::string CoordElement::str() const {
  std::string s = "(";
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(x(i));
  }
  s += "|";
  for (int i = n(); i >= 1; --i) {
    s += std::to_string(xb(i));
    if (i > 1) s += ",";
  }
  return s + ")";
}

CoordElement CoordElement::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') t += c;
  auto bar = t.find('|');
  if (bar == std::string::npos) throw DomainError("coordinate text needs '|': " + text);
  auto nums = [&](const std::string& part) {
    std::vector<int> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw DomainError("empty coordinate in " + text);
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw DomainError("bad coordinate in " + text);
      out.push_back(v);
    }
    return out;
  };
  return from_printed(nums(t.substr(0, bar)), nums(t.substr(bar + 1)));
}

bool is_valid(const AlgebraParams& p, const CoordElement& b) {
  if (b.n() != p.n || static_cast<int>(b.xbs.size()) != p.n) return false;
  for (int i = 1; i <= p.n; ++i)
    if (b.x(i) < 0 || b.xb(i) < 0) return false;
  if (b.x(p.n) > 0 && b.xb(p.n) > 0) return false;
  return b.level() == p.l;
}

std::vector<CoordElement> enumerate_B(const AlgebraParams& p) {
  std::vector<CoordElement> out;
  const int slots = 2 * p.n;
  std::vector<int> cur(slots, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == slots - 1) {
      cur[k] = left;
      std::vector<int> x(cur.begin(), cur.begin() + p.n);
      std::vector<int> xb(cur.begin() + p.n, cur.end());
      CoordElement b = CoordElement::from_printed(x, xb);
      if (is_valid(p, b)) out.push_back(b);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, p.l);
  std::sort(out.begin(), out.end());
  return out;
}

int coord_phi(const AlgebraParams& p, int i, const CoordElement& b) {
  p.check_color(i);
  const int n = p.n;
  if (i == 0) return b.xb(1) + pos(b.xb(2) - b.x(2));
  if (i <= n - 2) return b.x(i) + pos(b.xb(i + 1) - b.x(i + 1));
  if (i == n - 1) return b.x(n - 1) + b.xb(n);
  return b.x(n - 1) + b.x(n);
}

int coord_eps(const AlgebraParams& p, int i, const CoordElement& b) {
  p.check_color(i);
  const int n = p.n;
  if (i == 0) return b.x(1) + pos(b.x(2) - b.xb(2));
  if (i <= n - 2) return b.xb(i) + pos(b.x(i + 1) - b.xb(i + 1));
  if (i == n - 1) return b.xb(n - 1) + b.x(n);
  return b.xb(n - 1) + b.xb(n);
}

std::vector<int> coord_phi_vector(const AlgebraParams& p, const CoordElement& b) {
  std::vector<int> v;
  for (int i = 0; i <= p.n; ++i) v.push_back(coord_phi(p, i, b));
  return v;
}

std::vector<int> coord_eps_vector(const AlgebraParams& p, const CoordElement& b) {
  std::vector<int> v;
  for (int i = 0; i <= p.n; ++i) v.push_back(coord_eps(p, i, b));
  return v;
}

ClassicalWeight coord_cwt(const AlgebraParams& p, const CoordElement& b) {
  ClassicalWeight w(p.n);
  for (int i = 0; i <= p.n; ++i) w[i] = coord_phi(p, i, b) - coord_eps(p, i, b);
  return w;
}

std::optional<CoordElement> coord_f(const AlgebraParams& p, int i, const CoordElement& b) {
  require_valid(p, b);
  if (coord_phi(p, i, b) == 0) return std::nullopt;
  const int n = p.n;
  CoordElement r = b;
  if (i == 0) {
    if (b.x(2) >= b.xb(2)) {
      r.x(2) += 1;
      r.xb(1) -= 1;
    } else {
      r.x(1) += 1;
      r.xb(2) -= 1;
    }
  } else if (i <= n - 2) {
    if (b.x(i + 1) >= b.xb(i + 1)) {
      r.x(i) -= 1;
      r.x(i + 1) += 1;
    } else {
      r.xb(i + 1) -= 1;
      r.xb(i) += 1;
    }
  } else if (i == n - 1) {
    if (b.xb(n) == 0) {
      r.x(n - 1) -= 1;
      r.x(n) += 1;
    } else {
      r.xb(n) -= 1;
      r.xb(n - 1) += 1;
    }
  } else {
    if (b.x(n) >= 1) {
      r.x(n) -= 1;
      r.xb(n - 1) += 1;
    } else {
      r.x(n - 1) -= 1;
      r.xb(n) += 1;
    }
  }
  if (!is_valid(p, r)) throw IntegrityError("f_" + std::to_string(i) + " left B^l from " + b.str());
  return r;
}

std::optional<CoordElement> coord_e(const AlgebraParams& p, int i, const CoordElement& b) {
  require_valid(p, b);
  if (coord_eps(p, i, b) == 0) return std::nullopt;
  const int n = p.n;
  CoordElement r = b;
  if (i == 0) {
    if (b.x(2) > b.xb(2)) {
      r.x(2) -= 1;
      r.xb(1) += 1;
    } else {
      r.x(1) -= 1;
      r.xb(2) += 1;
    }
  } else if (i <= n - 2) {
    if (b.x(i + 1) > b.xb(i + 1)) {
      r.x(i) += 1;
      r.x(i + 1) -= 1;
    } else {
      r.xb(i + 1) += 1;
      r.xb(i) -= 1;
    }
  } else if (i == n - 1) {
    if (b.x(n) >= 1) {
      r.x(n - 1) += 1;
      r.x(n) -= 1;
    } else {
      r.xb(n) += 1;
      r.xb(n - 1) -= 1;
    }
  } else {
    if (b.xb(n) == 0) {
      r.x(n) += 1;
      r.xb(n - 1) -= 1;
    } else {
      r.x(n - 1) += 1;
      r.xb(n) -= 1;
    }
  }
  if (!is_valid(p, r)) throw IntegrityError("e_" + std::to_string(i) + " left B^l from " + b.str());
  return r;
}

namespace {

CoordElement unique_match(const AlgebraParams& p, const ClassicalWeight& lambda, bool use_phi) {
  if (lambda.size() != p.n + 1) throw DomainError("weight must have n+1 coefficients");
  std::vector<CoordElement> hits;
  for (const auto& b : enumerate_B(p)) {
    auto v = use_phi ? coord_phi_vector(p, b) : coord_eps_vector(p, b);
    if (v == lambda.coeffs) hits.push_back(b);
  }
  if (hits.size() != 1)
    throw IntegrityError("perfectness violated: " + std::to_string(hits.size()) + " elements with " +
                         (use_phi ? "phi" : "eps") + " = " + lambda.str());
  return hits.front();
}

}  // namespace

CoordElement minimal_element(const AlgebraParams& p, const ClassicalWeight& lambda) {
  return unique_match(p, lambda, false);
}

CoordElement maximal_element(const AlgebraParams& p, const ClassicalWeight& lambda) {
  return unique_match(p, lambda, true);
}

}  // namespace dncrystal
