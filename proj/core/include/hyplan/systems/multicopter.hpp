#pragma once

#include "hyplan/hybrid_system.hpp"
#include "hyplan/systems/geometry.hpp"

#include <vector>

namespace hyplan {

/// Planar collision-resilient multicopter among walls.
///
/// State (p_x, p_y, v_x, v_y, a_x, a_y); flow x' = (v, a, u), u in
/// [-u_max, u_max]^2. At a wall, v_n+ = -e v_n and
/// v_t+ = v_t + kappa (-e - 1) atan(v_t / v_n), p+ = p, a+ = 0.
struct MulticopterConfig {
  std::vector<Rect> walls{{0.5, 4.5, 1.0, 1.5}, {0.5, 4.5, 2.5, 3.0}, {0.0, 0.5, 1.5, 2.5}};
  double e = 0.43;
  double kappa = 0.20;
  double u_max = 1.0;
  double surface_band = 0.1;
  double v_max = 2.0;
  double a_max = 2.0;
  double width = 6.0;   // arena [0, width] x [0, height]
  double height = 5.0;

  void check() const;
};

/// Unsafe: outside the open arena or deeper than the band inside a wall.
HybridSystem make_multicopter(const MulticopterConfig& cfg = {});

}  // namespace hyplan
