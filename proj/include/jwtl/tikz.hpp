// TikZ pictures of Dyck tilings: paths thick, tile boundaries thin,
// trajectories as colored polylines, dots as bullets on the lower path.
#pragma once

#include <string>
#include <vector>

#include "jwtl/diagram.hpp"
#include "jwtl/dyck.hpp"

namespace jwtl {

struct ColoredTrajectory {
  Trajectory trajectory;
  std::string color;
  bool vertical = true;
};

struct TikzOptions {
  std::vector<Chord> dotted;
  std::vector<ColoredTrajectory> trajectories;
  double scale = 0.4;
  bool standalone = false;
};

std::string tiling_tikz(const Tiling& t, const TikzOptions& opt = {});
// Wraps pictures into one standalone document.
std::string tikz_document(const std::vector<std::string>& pictures);

}  // namespace jwtl
