#pragma once

#include "hyplan/hybrid_system.hpp"
#include "hyplan/systems/geometry.hpp"

#include <vector>

namespace hyplan {

/// Pinball table: two fixed walls and a set of actuated paddles.
///
/// State (p_x, p_y, v_x, v_y, a_x, a_y); flow x' = (v, a, u) with input
/// (u_x, u_y). The second input slot is the paddle tangential impulse during
/// jumps and is fixed at zero during flow. The first slot, during jumps, is
/// the normal impulse u_paddle.
struct PinballConfig {
  std::vector<Rect> walls{{-1.0, 0.0, -11.0, 0.0}, {5.0, 6.0, -11.0, 0.0}};
  std::vector<Rect> paddles{{0.3, 1.3, -4.4, -4.0}, {1.7, 2.6, -5.4, -5.0}, {3.2, 4.7, -4.4, -4.0}};
  double e_wall = 0.8;
  double e_paddle = 0.6;
  double u_max = 4.0;           // |u_x| during flow, |u_t| on paddle tops
  double paddle_impulse_max = 4.0;  // u_paddle in [0, max] on paddle sides
  double surface_band = 0.2;    // tolerance for reaching a surface
  double gravity = 9.81;        // initial a_y = -gravity
  double v_max = 15.0;
  double a_max = 10.0;

  void check() const;
};

/// Jump set: within surface_band inside M and moving strictly into the
/// contact face. Flow set: not in D and no deeper than surface_band.
/// Unsafe: the drains p_x in [0, 1) or (4, 5] below p_y = -10, deeper than
/// the band inside M, or beyond the walls.
HybridSystem make_pinball(const PinballConfig& cfg = {});

/// {0.5, 1, 2, 3.5, 4, 4.5} x {0}^4 x {-gravity}.
std::vector<Vector> pinball_initial_states(const PinballConfig& cfg = {});

}  // namespace hyplan
