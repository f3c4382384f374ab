#include "dncrystal/verify.hpp"

#include <algorithm>

#include "dncrystal/io.hpp"

namespace dncrystal {

namespace {

std::string opt_str(const std::optional<SliceClass>& c) { return c ? describe(c->rep) : "null"; }

// Naive reduction of p(T-1) x ... x p(0) with the ground tail cut at T.
Signature truncated_signature(int i, const Path& p, int T) {
  const AlgebraParams& prm = p.ground->params();
  std::vector<ColumnSymbols> cols;
  for (int k = T - 1; k >= 0; --k) {
    const CoordElement& b = p.component(k);
    cols.push_back({k, coord_eps(prm, i, b), coord_phi(prm, i, b)});
  }
  Signature s = reduce_signature(cols);
  // the ones of column T-1 would be cancelled by the cut-off part of the tail
  Signature trimmed;
  for (int c : s.one_positions)
    if (c != T - 1) trimmed.one_positions.push_back(c);
  trimmed.zero_positions = s.zero_positions;
  trimmed.ones = static_cast<int>(trimmed.one_positions.size());
  trimmed.zeros = static_cast<int>(trimmed.zero_positions.size());
  return trimmed;
}

bool same(const Signature& a, const Signature& b) {
  return a.one_positions == b.one_positions && a.zero_positions == b.zero_positions;
}

template <class State, class F, class E, class Phi, class Eps, class Cwt>
void check_axioms(SuiteReport& r, const std::string& tag, const AlgebraParams& p, const std::vector<State>& states,
                  F f, E e, Phi phi, Eps eps, Cwt cwt, std::function<std::string(const State&)> show) {
  for (const auto& x : states) {
    for (int i = 0; i <= p.n; ++i) {
      ++r.checks;
      auto y = f(i, x);
      if (y) {
        auto back = e(i, *y);
        if (!back || !(*back == x)) r.fail(tag + ": e_" + std::to_string(i) + " f_" + std::to_string(i) + " != id at " + show(x));
        if (cwt(*y) != cwt(x) - classical_alpha(p, i))
          r.fail(tag + ": weight law fails for f_" + std::to_string(i) + " at " + show(x));
      }
      int len = 0;
      for (auto cur = f(i, x); cur; cur = f(i, *cur)) ++len;
      if (len != phi(i, x)) r.fail(tag + ": f-string length != phi_" + std::to_string(i) + " at " + show(x));
      len = 0;
      for (auto cur = e(i, x); cur; cur = e(i, *cur)) ++len;
      if (len != eps(i, x)) r.fail(tag + ": e-string length != eps_" + std::to_string(i) + " at " + show(x));
    }
  }
}

}  // namespace

SuiteReport verify_psi(const AlgebraParams& p) {
  SuiteReport r{"psi", 0, 0, {}};
  for (const auto& b : enumerate_B(p)) {
    const SliceClass c = psi(p, b);
    if (!(phi_map(p, c) == b)) r.fail("phi_map(psi(b)) != b for " + b.str());
    for (int i = 0; i <= p.n; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        ++r.checks;
        auto want_b = dir ? coord_e(p, i, b) : coord_f(p, i, b);
        std::optional<SliceClass> want;
        if (want_b) want = psi(p, *want_b);
        auto got = dir ? slice_e(i, c) : slice_f(i, c);
        if (want != got)
          r.fail(std::string(dir ? "e_" : "f_") + std::to_string(i) + " at " + b.str() + ": slice gives " +
                 opt_str(got) + ", psi of coordinates gives " + opt_str(want));
      }
      if (slice_phi(i, c) != coord_phi(p, i, b) || slice_eps(i, c) != coord_eps(p, i, b))
        r.fail("phi/eps of color " + std::to_string(i) + " disagree at " + b.str());
    }
    if (slice_cwt(c) != coord_cwt(p, b)) r.fail("cwt disagrees at " + b.str());
  }
  return r;
}

SuiteReport verify_signature(const AlgebraParams& p, int depth) {
  SuiteReport r{"signature", 0, 0, {}};
  for (const auto& lambda : dominant_weights(p)) {
    auto g = std::make_shared<GroundWall>(p.n, lambda);
    GenerateOptions opt;
    opt.max_depth = depth;
    std::vector<Wall> walls;
    generate(wall_realization(p.n), ground_wall(g), opt, &walls);
    for (const auto& w : walls)
      for (int i = 0; i <= p.n; ++i) {
        ++r.checks;
        const Signature s = i_signature(w, i);
        if (!same(s, i_signature_extended(w, i, 1)) || !same(s, i_signature_extended(w, i, 2)))
          r.fail("wall signature unstable under tail extension: color " + std::to_string(i) + " at " + describe(w));
      }
    std::vector<Path> paths;
    generate(path_realization(p.n), ground_path(g->path_ptr()), opt, &paths);
    for (const auto& q : paths)
      for (int i = 0; i <= p.n; ++i) {
        ++r.checks;
        const Signature s = path_signature(i, q);
        for (int len : {4, 8, 16}) {
          const Signature t = truncated_signature(i, q, q.K() + len);
          if (!same(s, t))
            r.fail("path signature differs from truncated tail of length " + std::to_string(len) + ": color " +
                   std::to_string(i) + " at " + describe(q));
        }
      }
  }
  return r;
}

SuiteReport verify_ground(const AlgebraParams& p) {
  SuiteReport r{"ground", 0, 0, {}};
  for (int l = 1; l <= std::max(p.l, 2); ++l) {
    for (const auto& lambda : dominant_weights(AlgebraParams(p.n, l))) {
      const std::string tag = lambda.str();
      auto g = std::make_shared<GroundWall>(p.n, lambda);
      const Wall w = ground_wall(g);
      r.checks += 4;
      if (!is_valid_wall(w)) r.fail("ground wall not valid for " + tag);
      if (!is_proper(w)) r.fail("ground wall not proper for " + tag);
      if (!is_reduced(w)) r.fail("ground wall not reduced for " + tag);
      for (int i = 0; i <= p.n; ++i) {
        if (wall_eps(i, w) != 0) r.fail("ground wall has eps_" + std::to_string(i) + " > 0 for " + tag);
        if (wall_phi(i, w) != lambda[i]) r.fail("ground wall phi_" + std::to_string(i) + " != a_i for " + tag);
      }
      // a long explicit stretch of ground columns must interlock and stay proper
      Wall longer = w;
      longer.materialize(8);
      ++r.checks;
      if (!is_valid_wall(longer) || !is_proper(longer)) r.fail("explicit ground columns fail interlocking for " + tag);
      const AlgebraParams prm = g->path().params();
      for (int k = 0; k <= 8; ++k) {
        ++r.checks;
        if (coord_phi_vector(prm, g->path().element(k + 1)) != coord_eps_vector(prm, g->path().element(k)))
          r.fail("ground path recurrence fails at k=" + std::to_string(k) + " for " + tag);
        if (!(phi_map(prm, g->column(k)) == g->path().element(k)))
          r.fail("ground column does not map to the ground path at k=" + std::to_string(k) + " for " + tag);
      }
    }
  }
  return r;
}

SuiteReport verify_axioms(const AlgebraParams& p, int depth) {
  SuiteReport r{"axioms", 0, 0, {}};
  const auto elems = enumerate_B(p);
  check_axioms<CoordElement>(
      r, "coords", p, elems, [&](int i, const CoordElement& b) { return coord_f(p, i, b); },
      [&](int i, const CoordElement& b) { return coord_e(p, i, b); },
      [&](int i, const CoordElement& b) { return coord_phi(p, i, b); },
      [&](int i, const CoordElement& b) { return coord_eps(p, i, b); },
      [&](const CoordElement& b) { return coord_cwt(p, b); }, [](const CoordElement& b) { return b.str(); });
  std::vector<SliceClass> classes;
  for (const auto& b : elems) classes.push_back(psi(p, b));
  check_axioms<SliceClass>(
      r, "slices", p, classes, [](int i, const SliceClass& c) { return slice_f(i, c); },
      [](int i, const SliceClass& c) { return slice_e(i, c); },
      [](int i, const SliceClass& c) { return slice_phi(i, c); },
      [](int i, const SliceClass& c) { return slice_eps(i, c); }, [](const SliceClass& c) { return slice_cwt(c); },
      [](const SliceClass& c) { return describe(c.rep); });
  for (const auto& lambda : dominant_weights(p)) {
    auto g = std::make_shared<GroundWall>(p.n, lambda);
    GenerateOptions opt;
    opt.max_depth = depth;
    std::vector<Wall> walls;
    generate(wall_realization(p.n), ground_wall(g), opt, &walls);
    check_axioms<Wall>(
        r, "walls", p, walls, [](int i, const Wall& w) { return wall_f(i, w); },
        [](int i, const Wall& w) { return wall_e(i, w); }, [](int i, const Wall& w) { return wall_phi(i, w); },
        [](int i, const Wall& w) { return wall_eps(i, w); }, [](const Wall& w) { return wall_cwt(w); },
        [](const Wall& w) { return describe(w); });
    std::vector<Path> paths;
    generate(path_realization(p.n), ground_path(g->path_ptr()), opt, &paths);
    check_axioms<Path>(
        r, "paths", p, paths, [](int i, const Path& q) { return path_f(i, q); },
        [](int i, const Path& q) { return path_e(i, q); }, [](int i, const Path& q) { return path_phi(i, q); },
        [](int i, const Path& q) { return path_eps(i, q); }, [](const Path& q) { return path_cwt(q); },
        [](const Path& q) { return describe(q); });
  }
  return r;
}

}  // namespace dncrystal
