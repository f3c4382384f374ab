#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "dncrystal/coord_crystal.hpp"
#include "dncrystal/signature.hpp"

namespace dncrystal {

/// Ground path of a dominant weight: g(0) has phi = lambda, phi(g(k+1)) = eps(g(k)).
/// The sequence is eventually periodic, so it is stored up to its first repeat.
class GroundPath {
 public:
  GroundPath(int n, const ClassicalWeight& lambda);

  const AlgebraParams& params() const { return params_; }
  const ClassicalWeight& lambda() const { return lambda_; }
  int n() const { return params_.n; }
  int level() const { return params_.l; }
  const CoordElement& element(int k) const { return seq_[index(k)]; }
  int phi(int i, int k) const { return phi_[index(k)][i]; }
  int eps(int i, int k) const { return eps_[index(k)][i]; }
  int cycle_start() const { return start_; }
  int cycle_length() const { return static_cast<int>(seq_.size()) - start_; }

 private:
  int index(int k) const;

  AlgebraParams params_;
  ClassicalWeight lambda_;
  std::vector<CoordElement> seq_;
  std::vector<std::vector<int>> phi_, eps_;
  int start_ = 0;
};

/// Eventually-ground sequence; prefix holds p(0)..p(K-1).
struct Path {
  std::shared_ptr<const GroundPath> ground;
  std::vector<CoordElement> prefix;
  std::optional<BlockCount> k;  // known when produced from the ground path by recorded moves

  int K() const { return static_cast<int>(prefix.size()); }
  const CoordElement& component(int j) const { return j < K() ? prefix[j] : ground->element(j); }
  void normalize();

  friend bool operator==(const Path& a, const Path& b) {
    return a.ground->lambda() == b.ground->lambda() && a.prefix == b.prefix;
  }
};

Path ground_path(std::shared_ptr<const GroundPath> g);
Signature path_signature(int i, const Path& p);
std::optional<Path> path_f(int i, const Path& p);
std::optional<Path> path_e(int i, const Path& p);
int path_phi(int i, const Path& p);
int path_eps(int i, const Path& p);
ClassicalWeight path_cwt(const Path& p);
std::pair<ClassicalWeight, BlockCount> path_wt(const Path& p);
std::string describe(const Path& p);

}  // namespace dncrystal
