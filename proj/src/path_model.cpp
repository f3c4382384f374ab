#include "dncrystal/path_model.hpp"

#include <map>

namespace dncrystal {

GroundPath::GroundPath(int n, const ClassicalWeight& lambda) : lambda_(lambda) {
  AlgebraParams probe(n, 1);
  if (lambda.size() != n + 1) throw DomainError("lambda needs n+1 coefficients");
  if (!lambda.dominant()) throw DomainError("lambda must be dominant: " + lambda.str());
  const int l = level_of(probe, lambda);
  if (l < 1) throw DomainError("lambda must have positive level");
  params_ = AlgebraParams(n, l);

  std::map<std::vector<int>, int> seen;
  CoordElement g = maximal_element(params_, lambda);
  while (true) {
    auto key = g.printed();
    auto it = seen.find(key);
    if (it != seen.end()) {
      start_ = it->second;
      break;
    }
    seen[key] = static_cast<int>(seq_.size());
    seq_.push_back(g);
    phi_.push_back(coord_phi_vector(params_, g));
    eps_.push_back(coord_eps_vector(params_, g));
    g = maximal_element(params_, ClassicalWeight(eps_.back()));
  }
}

int GroundPath::index(int k) const {
  if (k < 0) throw DomainError("negative column index");
  const int sz = static_cast<int>(seq_.size());
  if (k < sz) return k;
  return start_ + (k - start_) % (sz - start_);
}

void Path::normalize() {
  while (!prefix.empty() && prefix.back() == ground->element(K() - 1)) prefix.pop_back();
}

Path ground_path(std::shared_ptr<const GroundPath> g) {
  Path p;
  p.k = BlockCount(g->n());
  p.ground = std::move(g);
  return p;
}

Signature path_signature(int i, const Path& p) {
  const AlgebraParams& prm = p.ground->params();
  prm.check_color(i);
  const int K = p.K();
  return tail_signature(K, p.ground->phi(i, K), [&](int k) {
    return std::pair<int, int>{coord_eps(prm, i, p.prefix[k]), coord_phi(prm, i, p.prefix[k])};
  });
}

namespace {

std::optional<Path> act(int i, const Path& p, bool lower) {
  const AlgebraParams& prm = p.ground->params();
  const Signature s = path_signature(i, p);
  if (lower ? !s.has_zero() : !s.has_one()) return std::nullopt;
  const int col = lower ? s.leftmost_zero() : s.rightmost_one();
  Path out = p;
  while (out.K() <= col) out.prefix.push_back(p.ground->element(out.K()));
  auto r = lower ? coord_f(prm, i, out.prefix[col]) : coord_e(prm, i, out.prefix[col]);
  if (!r) throw IntegrityError("signature selected a column where the operator is undefined");
  out.prefix[col] = *r;
  out.normalize();
  if (out.k) {
    out.k->add(i, lower ? 1 : -1);
    if (out.k->halves[i] < 0) throw IntegrityError("e_i removed more i-blocks than were added");
  }
  return out;
}

}  // namespace

std::optional<Path> path_f(int i, const Path& p) { return act(i, p, true); }
std::optional<Path> path_e(int i, const Path& p) { return act(i, p, false); }
int path_phi(int i, const Path& p) { return path_signature(i, p).zeros; }
int path_eps(int i, const Path& p) { return path_signature(i, p).ones; }

ClassicalWeight path_cwt(const Path& p) {
  ClassicalWeight w(p.ground->n());
  for (int i = 0; i <= p.ground->n(); ++i) w[i] = path_phi(i, p) - path_eps(i, p);
  return w;
}

std::pair<ClassicalWeight, BlockCount> path_wt(const Path& p) {
  if (!p.k) throw UnsupportedInput("path weight is only known for paths generated from the ground path");
  return {p.ground->lambda(), *p.k};
}

std::string describe(const Path& p) {
  if (p.prefix.empty()) return "ground";
  std::string s;
  for (int k = p.K() - 1; k >= 0; --k) {
    s += p.prefix[k].str();
    if (k) s += " x ";
  }
  return s;
}

}  // namespace dncrystal
