#pragma once

#include <memory>
#include <string>

#include "dncrystal/graphgen.hpp"
#include "dncrystal/wall.hpp"

namespace dncrystal {

/// {"lambda":[...],"columns":[[[t,"E"],...],...],"k":[...]}; column 0 first.
std::string wall_to_json(const Wall& w);
/// Builds its own ground wall when `g` is null.
Wall wall_from_json(const std::string& text, std::shared_ptr<const GroundWall> g = nullptr);

/// {"lambda":[...],"components":["(x|xb)",...]}; component 0 first.
std::string path_to_json(const Path& p);
Path path_from_json(const std::string& text, std::shared_ptr<const GroundPath> g = nullptr);

Realization<Wall> wall_realization(int n);
Realization<Path> path_realization(int n);

enum class PerfectRealization { Coords, Slices };
/// Whole of B^l: nodes in enumeration order, every defined f-edge.
CrystalGraph perfect_crystal_graph(const AlgebraParams& p, PerfectRealization which);

}  // namespace dncrystal
